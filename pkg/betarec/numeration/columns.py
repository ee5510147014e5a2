# betarec/numeration/columns.py
"""
Column words: a tuple of synchronized pointed words read as one ultimately
periodic word over digit vectors, with a single star vector.
"""

import math

from ..automata.buchi import STAR, UltimatelyPeriodicWord, is_star, star
from ..errors import AlphabetError
from .words import EventuallyPeriodicWord, PointedWord, parse_digits


def encode_columns(words: list[PointedWord]) -> UltimatelyPeriodicWord:
    """
    Interleave synchronized words into columns.

    Raises:
        AlphabetError: integer parts of different lengths
    """
    if not words:
        raise AlphabetError("need at least one track")
    lengths = {len(w.integer_part) for w in words}
    if len(lengths) != 1:
        raise AlphabetError(f"tracks are not synchronized: integer lengths {sorted(lengths)}")
    n_int = lengths.pop()
    fracs = [w.fractional_part for w in words]
    pre = max(len(f.preperiod) for f in fracs)
    loop = math.lcm(*(len(f.period) for f in fracs))
    head = [tuple(w.integer_part[i] for w in words) for i in range(n_int)]
    head.append(star(len(words)))
    head.extend(tuple(f[i] for f in fracs) for i in range(pre))
    cycle = [tuple(f[i] for f in fracs) for i in range(pre, pre + loop)]
    return UltimatelyPeriodicWord.of(head, cycle)


def decode_columns(word: UltimatelyPeriodicWord) -> list[PointedWord]:
    """
    Split a column word back into its tracks.

    Raises:
        AlphabetError: the star vector is missing, repeated or inside the loop
    """
    stars = [i for i, x in enumerate(word.prefix) if is_star(x)]
    if any(is_star(x) for x in word.loop) or len(stars) != 1:
        raise AlphabetError("column word must contain exactly one star vector, outside the loop")
    for x in list(word.prefix) + list(word.loop):
        if not is_star(x) and STAR in x:
            raise AlphabetError(f"partial star in column {x!r}")
    k = stars[0]
    arity = len(word.prefix[k])
    head, tail = word.prefix[:k], word.prefix[k + 1 :]
    out = []
    for j in range(arity):
        frac = EventuallyPeriodicWord.of([x[j] for x in tail], [x[j] for x in word.loop])
        out.append(PointedWord.of([x[j] for x in head], frac, strip=False))
    return out


def parse_signed_word(text: str) -> UltimatelyPeriodicWord:
    """
    One-track column word from `u*v(p)`, digits of either sign allowed.

    Raises:
        AlphabetError: bad digit groups or a missing closing parenthesis
    """
    int_text, _, frac_text = text.strip().partition("*")
    if "(" in frac_text:
        if not frac_text.endswith(")"):
            raise AlphabetError(f"bad periodic word {text!r}")
        pre_text, per_text = frac_text[:-1].split("(", 1)
    else:
        pre_text, per_text = frac_text, "0"
    head = [(d,) for d in parse_digits(int_text)] + [star(1)] + [(d,) for d in parse_digits(pre_text)]
    loop = [(d,) for d in parse_digits(per_text)]
    if not loop:
        raise AlphabetError(f"empty period in {text!r}")
    return UltimatelyPeriodicWord.of(head, loop)
