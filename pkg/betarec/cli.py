# betarec/cli.py
"""
The `betarec` command line.

Human-readable results go to stdout, artifacts to the files named by -o
(JSON, or stdout when -o is omitted). Domain errors exit with status 1,
usage errors with status 2.
"""

from dotenv import load_dotenv

load_dotenv()

import logging
import re
from pathlib import Path
from typing import TypeVar

import click
from pydantic import BaseModel, ValidationError

from .algebraic.base import BaseProfile, parse_base
from .algebraic.field import FieldElement, parse_element
from .automata.buchi import BuchiAutomaton, is_empty
from .automata.complement import complement
from .automata.export import to_dot
from .automata.ops import cyclic_unroll, intersect, union
from .config import settings
from .errors import AlphabetError, BetarecError
from .gdifs import (
    Gdifs,
    attractor_render,
    cantor_gdifs,
    cantor_ifs,
    dimension_estimate,
    from_automaton,
    gdifs_from_kernel,
    kernel,
    menger_ifs,
    pascal_ifs,
    rauzy_render,
    write_raster,
)
from .limits import override_limits
from .logic import compile_formula, decide_sentence, format_formula, parse_formula, synthesize_formula
from .numeration import PointedWord, decode_columns, format_word, greedy_expand, parse_signed_word
from .realsets import add_relation, beta_integers, member, order_relation, universe
from .realsets.model import RealSetAutomaton
from .schemas import AutomatonModel, BaseReport, GdifsModel, KernelReport, RealSetModel
from .transducers import build_normalizer, transduce_word

logger = logging.getLogger(__name__)

EXAMPLES = {
    "cantor": cantor_gdifs,
    "cantor-ifs": cantor_ifs,
    "pascal": pascal_ifs,
    "menger": menger_ifs,
}

M = TypeVar("M", bound=BaseModel)

# q:[...] components may contain commas and may follow a label
_COMPONENT = re.compile(r"\s*((?:[^,:\[\]]+:)?q:\[[^\]]*\]|[^,]+)")


# ── Helpers ────────────────────────────────────────────────


class _Group(click.Group):
    """Root group: domain errors become exit status 1."""

    def invoke(self, ctx: click.Context):
        try:
            return super().invoke(ctx)
        except BetarecError as e:
            logger.debug("Domain error", exc_info=True)
            click.echo(f"error: {e}", err=True)
            ctx.exit(1)


def _base(ctx, param, value: str | None) -> BaseProfile | None:
    return parse_base(value) if value is not None else None


def _element(base: BaseProfile, text: str) -> FieldElement:
    """`q:[...]` or a rational, optionally behind a `label:` prefix."""
    text = text.strip()
    if not text.startswith("q:") and ":" in text:
        text = text.split(":", 1)[1]
    return parse_element(base.field, text)


def parse_point(base: BaseProfile, text: str) -> tuple[FieldElement, ...]:
    return tuple(_element(base, part) for part in _COMPONENT.findall(text) if part.strip())


def _read(model: type[M], path: str) -> M:
    try:
        return model.model_validate_json(Path(path).read_text())
    except ValidationError as e:
        raise click.ClickException(f"{path}: not a valid {model.__name__} ({e.error_count()} errors)") from e


def _emit(document: BaseModel, output: str | None) -> None:
    text = document.model_dump_json(indent=2)
    if output is None:
        click.echo(text)
    else:
        Path(output).write_text(text + "\n")
        logger.info(f"Wrote {output}")


def _emit_dot(machine: BuchiAutomaton, dot: str | None, name: str) -> None:
    if dot is not None:
        Path(dot).write_text(to_dot(machine, name))


def _emit_set(x: RealSetAutomaton, output: str | None, dot: str | None) -> None:
    _emit(RealSetModel.from_domain(x), output)
    _emit_dot(x.machine, dot, "set")


def _emit_machine(a: BuchiAutomaton, output: str | None, dot: str | None) -> None:
    _emit(AutomatonModel.from_domain(a), output)
    _emit_dot(a, dot, "automaton")


def _load_gdifs(path: str | None, example: str | None) -> Gdifs:
    if (path is None) == (example is None):
        raise click.UsageError("give exactly one of --gdifs and --example")
    if example is not None:
        return EXAMPLES[example]()
    return _read(GdifsModel, path).to_domain()


base_option = click.option("--base", "base", required=True, callback=_base, help="int:<b> or poly:<c0,...,1>@(lo,hi)")
output_option = click.option("-o", "--output", type=click.Path(dir_okay=False), help="Write JSON here")
dot_option = click.option("--dot", type=click.Path(dir_okay=False), help="Also write DOT here")
gdifs_source = [
    click.option("--gdifs", "gdifs_path", type=click.Path(exists=True, dir_okay=False)),
    click.option("--example", type=click.Choice(sorted(EXAMPLES))),
]


def _with(options):
    def decorate(f):
        for option in reversed(options):
            f = option(f)
        return f

    return decorate


# ── Root ───────────────────────────────────────────────────


@click.group(cls=_Group)
@click.option("-v", "--verbose", count=True, help="-v for INFO, -vv for DEBUG")
@click.option("--complement-cap", type=int, help="States allowed in one complementation")
@click.option("--converter-cap", type=int, help="States allowed in a converter or carry automaton")
@click.option("--orbit-cap", type=int, help="Greedy iterates of 1 before a base counts as unknown")
@click.option("--kernel-max-k", type=int, help="Deepest kernel level explored")
@click.option("--kernel-max-classes", type=int, help="Kernel classes kept before giving up")
@click.option("--render-budget", type=int, help="Boxes alive at one render level")
def cli(verbose, complement_cap, converter_cap, orbit_cap, kernel_max_k, kernel_max_classes, render_budget):
    """Real-base numeration: automata, logic and fractals."""
    level = {0: settings.log_level, 1: "INFO"}.get(verbose, "DEBUG")
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s")
    try:
        override_limits(
            complement_cap=complement_cap,
            converter_cap=converter_cap,
            orbit_cap=orbit_cap,
            kernel_max_k=kernel_max_k,
            kernel_max_classes=kernel_max_classes,
            render_budget=render_budget,
        )
    except ValueError as e:
        raise click.UsageError(str(e)) from e


# ── Bases and expansions ───────────────────────────────────


@cli.group("base")
def base_group():
    """Base classification."""


@base_group.command("classify")
@base_option
@click.option("--json", "as_json", is_flag=True, help="Print the full report as JSON")
def base_classify(base: BaseProfile, as_json: bool):
    report = BaseReport.from_domain(base)
    click.echo(report.model_dump_json(indent=2) if as_json else report.summary())


@cli.command("expand")
@base_option
@click.option("--value", required=True, help="q:[c0,c1,...] or a rational, optionally prefixed by a label and ':'")
def expand(base: BaseProfile, value: str):
    """Print the greedy beta-expansion of a value."""
    click.echo(format_word(greedy_expand(_element(base, value), base)))


@cli.command("normalize")
@base_option
@click.option("--word", required=True, help="u*v(p); comma-separate digits when any is negative or above 9")
@click.option("--digits", help="Input digit alphabet, e.g. -1,0,1 (default: -c..c for the word's largest digit)")
def normalize(base: BaseProfile, word: str, digits: str | None):
    """Rewrite a representation over a larger digit set as a beta-expansion."""
    parsed = parse_signed_word(word)
    if digits is not None:
        alphabet = sorted({int(d) for d in digits.split(",")})
    else:
        c = max(1, *(abs(x[0]) for x in parsed.symbols() if isinstance(x[0], int)))
        alphabet = list(range(-c, c + 1))
    outputs = transduce_word(build_normalizer(base, alphabet), parsed, limit=1)
    if not outputs:
        raise AlphabetError(f"{word!r} is not accepted by the normalizer over {alphabet}")
    (result,) = decode_columns(outputs[0])
    click.echo(format_word(PointedWord.of(result.integer_part, result.fractional_part)))


# ── Automata ───────────────────────────────────────────────


@cli.group("aut")
def aut():
    """Operations on Büchi automata stored as JSON."""


machine_argument = click.argument("machine", type=click.Path(exists=True, dir_okay=False))


@aut.command("complement")
@machine_argument
@click.option("--method", type=click.Choice(["auto", "rank"]), default="auto")
@output_option
@dot_option
def aut_complement(machine, method, output, dot):
    a = _read(AutomatonModel, machine).to_domain()
    _emit_machine(complement(a, method=method), output, dot)


@aut.command("intersect")
@machine_argument
@click.argument("other", type=click.Path(exists=True, dir_okay=False))
@output_option
@dot_option
def aut_intersect(machine, other, output, dot):
    a, b = (_read(AutomatonModel, p).to_domain() for p in (machine, other))
    _emit_machine(intersect(a, b), output, dot)


@aut.command("union")
@machine_argument
@click.argument("other", type=click.Path(exists=True, dir_okay=False))
@output_option
@dot_option
def aut_union(machine, other, output, dot):
    a, b = (_read(AutomatonModel, p).to_domain() for p in (machine, other))
    _emit_machine(union(a, b), output, dot)


@aut.command("unroll")
@machine_argument
@click.option("-m", "copies", type=click.IntRange(min=1), required=True, help="Number of cyclic copies")
@output_option
@dot_option
def aut_unroll(machine, copies, output, dot):
    a = _read(AutomatonModel, machine).to_domain()
    _emit_machine(cyclic_unroll(a, copies), output, dot)


@aut.command("dot")
@machine_argument
def aut_dot(machine):
    click.echo(to_dot(_read(AutomatonModel, machine).to_domain()), nl=False)


@aut.command("empty")
@machine_argument
def aut_empty(machine):
    click.echo(str(is_empty(_read(AutomatonModel, machine).to_domain())).lower())


# ── Real sets ──────────────────────────────────────────────


@cli.group("rs")
def rs():
    """Recognizable subsets of R^n."""


@rs.command("universe")
@base_option
@click.option("-n", "arity", type=click.IntRange(min=1), default=1)
@output_option
@dot_option
def rs_universe(base, arity, output, dot):
    _emit_set(universe(base, arity), output, dot)


@rs.command("integers")
@base_option
@click.option("-n", "arity", type=click.IntRange(min=1), default=1)
@output_option
@dot_option
def rs_integers(base, arity, output, dot):
    """Z_beta^n."""
    _emit_set(beta_integers(base, arity), output, dot)


@rs.command("order")
@base_option
@output_option
@dot_option
def rs_order(base, output, dot):
    """{(x, y) : x < y}."""
    _emit_set(order_relation(base), output, dot)


@rs.command("add")
@base_option
@click.option("--method", type=click.Choice(["carry", "normalizer"]), default="carry")
@output_option
@dot_option
def rs_add(base, method, output, dot):
    """{(x, y, z) : x + y = z}."""
    _emit_set(add_relation(base, method=method), output, dot)


@rs.command("member")
@click.option("--set", "set_path", type=click.Path(exists=True, dir_okay=False), required=True)
@click.option("--point", required=True, help='Components separated by commas, e.g. "1/2,q:[0,1]"')
def rs_member(set_path, point):
    x = _read(RealSetModel, set_path).to_domain()
    click.echo(str(member(x, parse_point(x.base, point))).lower())


# ── Logic ──────────────────────────────────────────────────


@cli.group("logic")
def logic():
    """First-order formulas over (R, +, <=, 1, X_beta)."""


@logic.command("compile")
@base_option
@click.option("--formula", required=True)
@output_option
@dot_option
def logic_compile(base, formula, output, dot):
    """Compile a formula to a set automaton, tracks in order of first occurrence."""
    phi = parse_formula(formula, base)
    x = compile_formula(phi, base)
    click.echo(f"tracks: {', '.join(phi.free_vars()) or '-'}", err=True)
    _emit_set(x, output, dot)


@logic.command("decide")
@base_option
@click.option("--formula", required=True)
def logic_decide(base, formula):
    click.echo(str(decide_sentence(parse_formula(formula, base, free=()), base)).lower())


@logic.command("synthesize")
@click.option("--automaton", "set_path", type=click.Path(exists=True, dir_okay=False), required=True)
@click.option("--variables", help="Comma-separated free variable names")
def logic_synthesize(set_path, variables):
    """Print a formula defining the set of a set automaton."""
    x = _read(RealSetModel, set_path).to_domain()
    names = tuple(v.strip() for v in variables.split(",")) if variables else None
    click.echo(format_formula(synthesize_formula(x, names)))


# ── GDIFS ──────────────────────────────────────────────────


@cli.group("gdifs")
def gdifs():
    """Graph-directed IFS: rendering, kernels, conversions."""


@gdifs.command("render")
@_with(gdifs_source)
@click.option("--depth", type=click.IntRange(min=0), default=8)
@click.option("--resolution", type=click.IntRange(min=1), default=512)
@click.option("--slice-axis", type=click.IntRange(0, 2))
@click.option("--slice-value", type=float, default=0.0)
@click.option("--workers", type=click.IntRange(min=1))
@click.option("-o", "--output", type=click.Path(dir_okay=False), required=True, help=".pbm, .ppm or .png")
def gdifs_render(gdifs_path, example, depth, resolution, slice_axis, slice_value, workers, output):
    g = _load_gdifs(gdifs_path, example)
    if g.arity == 3 and slice_axis is None:
        raise click.UsageError("a 3-dimensional attractor needs --slice-axis")
    raster = attractor_render(
        g, depth, resolution, slice_axis=slice_axis, slice_value=slice_value, workers=workers
    )
    write_raster(raster, output)
    click.echo(f"{int(raster.sum())} pixels set")


@gdifs.command("rauzy")
@click.option("--depth", type=click.IntRange(min=0), default=18)
@click.option("--resolution", type=click.IntRange(min=1), default=512)
@click.option("-o", "--output", type=click.Path(dir_okay=False), required=True)
def gdifs_rauzy(depth, resolution, output):
    """Draw the tribonacci Rauzy fractal."""
    write_raster(rauzy_render(resolution, depth), output)


@gdifs.command("kernel")
@_with(gdifs_source)
@click.option("--set", "set_path", type=click.Path(exists=True, dir_okay=False))
@click.option("-c", "bound", type=click.IntRange(min=0), help="Digit bound; default the GDIFS bound")
@output_option
@click.option("--gdifs-out", type=click.Path(dir_okay=False), help="Write the kernel GDIFS here when complete")
def gdifs_kernel(gdifs_path, example, set_path, bound, output, gdifs_out):
    """Saturate the (beta, C)-kernel of a set or of a GDIFS attractor."""
    if set_path is not None:
        if gdifs_path is not None or example is not None:
            raise click.UsageError("give one of --set, --gdifs and --example")
        source = _read(RealSetModel, set_path).to_domain()
        if bound is None:
            raise click.UsageError("-c is required with --set")
    else:
        source = _load_gdifs(gdifs_path, example)
        bound = source.c if bound is None else bound
    family = kernel(source, bound)
    _emit(KernelReport.from_domain(family), output)
    click.echo(f"classes={len(family.classes)} status={family.status.value}", err=output is None)
    if gdifs_out is not None:
        Path(gdifs_out).write_text(GdifsModel.from_domain(gdifs_from_kernel(family)).model_dump_json(indent=2) + "\n")


@gdifs.command("from-automaton")
@click.option("--automaton", "machine", type=click.Path(exists=True, dir_okay=False), required=True)
@base_option
@click.option("-c", "bound", type=click.IntRange(min=0))
@output_option
def gdifs_from_automaton(machine, base, bound, output):
    """GDIFS of a trim closed automaton over digit columns."""
    _emit(GdifsModel.from_domain(from_automaton(_read(AutomatonModel, machine).to_domain(), base, bound)), output)


@gdifs.command("dimension")
@_with(gdifs_source)
def gdifs_dimension(gdifs_path, example):
    """Box dimension of a strongly connected GDIFS."""
    click.echo(f"{dimension_estimate(_load_gdifs(gdifs_path, example)):.6f}")


def main() -> None:
    cli(prog_name="betarec")


if __name__ == "__main__":
    main()
