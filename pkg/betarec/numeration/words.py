# betarec/numeration/words.py
"""
Digit words: eventually periodic words u v^omega and pointed words u * v.

Text syntax: `101*01(01)` is 101*01(01)^omega; digits outside 0..9 force
comma-separated groups, e.g. `-1,0*0(0,-1,0)`. A fractional part without
parentheses is finite (implicit (0)).
"""

import math
from dataclasses import dataclass
from itertools import islice

from ..errors import AlphabetError


def _primitive(period: tuple[int, ...]) -> tuple[int, ...]:
    n = len(period)
    for p in range(1, n + 1):
        if n % p == 0 and period[:p] * (n // p) == period:
            return period[:p]
    return period


@dataclass(frozen=True)
class EventuallyPeriodicWord:
    """
    Infinite word preperiod . period^omega in canonical form
    (primitive period, minimal preperiod).
    """
    preperiod: tuple[int, ...]
    period: tuple[int, ...]

    @classmethod
    def of(cls, preperiod, period) -> "EventuallyPeriodicWord":
        pre = tuple(int(d) for d in preperiod)
        per = tuple(int(d) for d in period)
        if not per:
            raise AlphabetError("period must be nonempty")
        per = _primitive(per)
        while pre and pre[-1] == per[-1]:
            per = (pre[-1],) + per[:-1]
            pre = pre[:-1]
        return cls(pre, per)

    @classmethod
    def zero(cls) -> "EventuallyPeriodicWord":
        return cls((), (0,))

    def __getitem__(self, i: int) -> int:
        if i < len(self.preperiod):
            return self.preperiod[i]
        return self.period[(i - len(self.preperiod)) % len(self.period)]

    def __iter__(self):
        i = 0
        while True:
            yield self[i]
            i += 1

    def prefix(self, n: int) -> tuple[int, ...]:
        return tuple(islice(iter(self), n))

    @property
    def is_zero_tail(self) -> bool:
        return self.period == (0,)

    @property
    def is_zero(self) -> bool:
        return self.is_zero_tail and not any(self.preperiod)

    def shift(self, k: int = 1) -> "EventuallyPeriodicWord":
        """sigma^k."""
        if k <= len(self.preperiod):
            return EventuallyPeriodicWord.of(self.preperiod[k:], self.period)
        r = (k - len(self.preperiod)) % len(self.period)
        return EventuallyPeriodicWord.of((), self.period[r:] + self.period[:r])

    def shifts(self) -> list["EventuallyPeriodicWord"]:
        """All distinct shifts."""
        out = []
        for k in range(len(self.preperiod) + len(self.period)):
            s = self.shift(k)
            if s not in out:
                out.append(s)
        return out

    def prepend(self, digits) -> "EventuallyPeriodicWord":
        return EventuallyPeriodicWord.of(tuple(digits) + self.preperiod, self.period)

    def negate(self) -> "EventuallyPeriodicWord":
        return EventuallyPeriodicWord(tuple(-d for d in self.preperiod), tuple(-d for d in self.period))

    def digits(self) -> set[int]:
        return set(self.preperiod) | set(self.period)

    def __str__(self) -> str:
        return format_fraction(self)


def lexicographic_compare(u: EventuallyPeriodicWord, v: EventuallyPeriodicWord) -> int:
    """-1, 0, 1; decided within max(|pre|) + lcm(|per|) symbols."""
    horizon = max(len(u.preperiod), len(v.preperiod)) + math.lcm(len(u.period), len(v.period))
    for i in range(horizon):
        a, b = u[i], v[i]
        if a != b:
            return -1 if a < b else 1
    return 0


@dataclass(frozen=True)
class PointedWord:
    """
    u * v: finite integer part (most significant first) and eventually periodic
    fractional part.
    """
    integer_part: tuple[int, ...]
    fractional_part: EventuallyPeriodicWord

    @classmethod
    def of(cls, integer_part, fractional_part: EventuallyPeriodicWord, strip: bool = True) -> "PointedWord":
        ip = tuple(int(d) for d in integer_part) or (0,)
        if strip:
            while len(ip) > 1 and ip[0] == 0:
                ip = ip[1:]
        word = cls(ip, fractional_part)
        signs = {(d > 0) - (d < 0) for d in word.all_digits()} - {0}
        if len(signs) > 1:
            raise AlphabetError(f"mixed-sign digits in {format_word(word)}")
        return word

    def all_digits(self) -> set[int]:
        return set(self.integer_part) | self.fractional_part.digits()

    @property
    def sign(self) -> int:
        signs = {(d > 0) - (d < 0) for d in self.all_digits()} - {0}
        return signs.pop() if signs else 0

    def negate(self) -> "PointedWord":
        return PointedWord(tuple(-d for d in self.integer_part), self.fractional_part.negate())

    def padded(self, length: int) -> "PointedWord":
        """Left-pad the integer part with zeros to `length` digits."""
        extra = length - len(self.integer_part)
        if extra <= 0:
            return self
        return PointedWord((0,) * extra + self.integer_part, self.fractional_part)

    def digit_at(self, position: int) -> int:
        """Digit of weight beta^position (0 outside the word)."""
        if position >= 0:
            idx = len(self.integer_part) - 1 - position
            return self.integer_part[idx] if idx >= 0 else 0
        return self.fractional_part[-position - 1]

    def __str__(self) -> str:
        return format_word(self)


# ── Text syntax ────────────────────────────────────────────


def _fmt_digits(digits) -> str:
    digits = list(digits)
    if all(0 <= d <= 9 for d in digits):
        return "".join(str(d) for d in digits)
    return ",".join(str(d) for d in digits)


def format_fraction(w: EventuallyPeriodicWord) -> str:
    return f"{_fmt_digits(w.preperiod)}({_fmt_digits(w.period)})"


def format_word(w: PointedWord) -> str:
    return f"{_fmt_digits(w.integer_part)}*{format_fraction(w.fractional_part)}"


def parse_digits(text: str) -> tuple[int, ...]:
    text = text.strip().rstrip(",").lstrip(",")
    if not text:
        return ()
    try:
        if "," in text or "-" in text:
            return tuple(int(p) for p in text.split(",") if p.strip())
        return tuple(int(c) for c in text)
    except ValueError as e:
        raise AlphabetError(f"bad digit group {text!r}") from e


def parse_fraction(text: str) -> EventuallyPeriodicWord:
    text = text.strip()
    if "(" in text:
        if not text.endswith(")"):
            raise AlphabetError(f"bad periodic word {text!r}")
        pre_text, per_text = text[:-1].split("(", 1)
        return EventuallyPeriodicWord.of(parse_digits(pre_text), parse_digits(per_text))
    return EventuallyPeriodicWord.of(parse_digits(text), (0,))


def parse_word(text: str) -> PointedWord:
    """Parse `u*v(p)`; missing star means an integer (fraction 0)."""
    if "*" in text:
        int_text, frac_text = text.split("*", 1)
    else:
        int_text, frac_text = text, ""
    return PointedWord.of(parse_digits(int_text), parse_fraction(frac_text), strip=False)
