import asyncio
from typing import Mapping, Optional, Sequence, Tuple

from sympy import Rational

from ..codes import (
    Code,
    ParityClass,
    four_circulant,
    parity_class,
    parse_generator_file,
    parse_spec_file,
    serialize_generator_file,
)
from ..config import Settings
from ..data import builtin_code, parse_support
from ..enumerators import (
    FamilyConstraints,
    GleasonCoefficients,
    GleasonType,
    Position,
    fit_coefficients,
    format_rational,
    gleason_basis,
    is_extremal,
    mallows_sloane,
    shadow_enumerator,
    solve_family,
    substitute,
    substitute_shadow,
)
from ..errors import DimensionError, SpecFormatError
from ..logging import CodesLogger
from ..models import CampaignStats, SearchConfig, WeightDistribution
from ..search import CampaignRunner
from ..shadow import (
    doubly_even_neighbors,
    find_low_weight_shadow,
    is_neighbor,
    neighbor_via_vector,
    shadow_decompose,
    shadow_distribution,
)
from ..weights import (
    enumerate_weight,
    find_low_weight,
    gram_invariant,
    min_weight,
    weight_distribution_bruteforce,
)
from .console import Console


class HandlerFactory:
    @staticmethod
    def create(
        settings: Settings,
        logger: CodesLogger,
        threads: Optional[int] = None,
        console: Optional[Console] = None,
    ) -> "Handler":
        console = console or Console(logger, threads or settings.max_threads)
        return Handler(console, settings)


def _read(path: str) -> str:
    with open(path) as handle:
        return handle.read()


def _summary(code: Code) -> str:
    kind = parity_class(code)
    if kind is ParityClass.NOT_SELF_DUAL:
        return f"not self-dual, n={code.n}, k={code.k}"
    return f"self-dual, {kind}, n={code.n}, k={code.k}"


def _family_constraints(
    n: int,
    gtype: GleasonType,
    d: int,
    pins: Sequence[Tuple[Position, Rational]],
    anchors: Sequence[Tuple[str, Position]],
) -> FamilyConstraints:
    constraints = FamilyConstraints.minimum_weight(n, gtype, d, anchors=dict(anchors))
    for position, value in pins:
        constraints.pin(position, value)
    return constraints


class Handler:
    def __init__(self, console: Console, settings: Settings):
        self._console = console
        self._settings = settings
        self._console.log.debug("Handler created")

    @property
    def console(self) -> Console:
        return self._console

    def close(self):
        self._console.close()

    def load_code(
        self,
        spec: Optional[str] = None,
        index: int = 1,
        generator: Optional[str] = None,
        code: Optional[str] = None,
    ) -> Code:
        """Code from a spec file line, a generator file or a vendored name."""
        if spec:
            specs = parse_spec_file(_read(spec))
            if not 1 <= index <= len(specs):
                raise SpecFormatError(f"{spec} has {len(specs)} specs, not {index}")
            return four_circulant(specs[index - 1], name=f"{spec}:{index}")
        if generator:
            return Code(parse_generator_file(_read(generator)), name=generator)
        if code:
            return builtin_code(code)
        raise SpecFormatError("one of --spec, --generator or --code is required")

    def build(self, code: Code, output: Optional[str] = None):
        self._console.message(_summary(code))
        if output:
            with open(output, "w") as handle:
                handle.write(serialize_generator_file(code.generator))
            self._console.log.finfo("Generator written to {output}")
        else:
            self._console.message(str(code.generator))

    def check(self, code: Code):
        self._console.message(_summary(code))
        if parity_class(code) is ParityClass.DOUBLY_EVEN:
            self._console.message(f"minimum weight bound {mallows_sloane(code.n)}")

    def minweight(
        self,
        code: Code,
        budget: Optional[int] = None,
        early_stop: Optional[int] = None,
        search_target: Optional[int] = None,
        iterations: int = 100,
        seed: int = 0,
    ):
        budget = budget or self._settings.minweight_budget
        self._console.progress(f"Certifying {code.name} with budget {budget}")
        certificate = min_weight(code, budget=budget, early_stop=early_stop)
        if search_target is not None and not certificate.is_exact:
            witness = find_low_weight(code, search_target, iterations, seed)
            if witness is not None:
                certificate = certificate.with_witness(witness)
        self._console.message(str(certificate))
        if certificate.witness is not None:
            support = ",".join(map(str, certificate.witness.support()))
            self._console.message(f"witness {support}")

    def distribution(self, code: Code) -> WeightDistribution:
        self._console.progress(f"Enumerating 2^{code.k} codewords")
        dist = weight_distribution_bruteforce(
            code, cap=self._settings.bruteforce_cap, jobs=self._console.jobs
        )
        self._console.message(dist.format())
        return dist

    def enumerate_weight(self, code: Code, weight: int, cap: int):
        words = enumerate_weight(
            code, weight, cap=cap, budget=self._settings.minweight_budget
        )
        self._console.progress(f"{len(words)} codewords of weight {weight}")
        for word in words:
            self._console.message(",".join(map(str, word.support())))

    def gram_invariant(self, code: Code, weight: int, cap: int):
        words = enumerate_weight(
            code, weight, cap=cap, budget=self._settings.minweight_budget
        )
        self._console.progress(f"{len(words)} codewords of weight {weight}")
        self._console.message(" ".join(map(str, gram_invariant(words))))

    def gleason_basis(self, n: int, gtype: GleasonType):
        for poly in gleason_basis(n, gtype):
            self._console.message(str(poly))

    def gleason_fit(self, distribution_file: str, gtype: GleasonType, n: int):
        dist = WeightDistribution.parse(_read(distribution_file), n)
        coeffs = fit_coefficients(dist, gtype)
        self._console.message(" ".join(format_rational(v) for v in coeffs.values))

    def gleason_shadow(self, n: int, values: Sequence[Rational]):
        coeffs = GleasonCoefficients.of(n, GleasonType.I, values)
        self._console.message(str(shadow_enumerator(n, coeffs)))

    def solve_family(
        self,
        n: int,
        gtype: GleasonType,
        d: int,
        pins: Sequence[Tuple[Position, Rational]] = (),
        anchors: Sequence[Tuple[str, Position]] = (),
    ):
        constraints = _family_constraints(n, gtype, d, pins, anchors)
        family = solve_family(n, gtype, constraints)
        self._console.message(family.format())

    def gleason_substitute(
        self,
        n: int,
        gtype: GleasonType,
        d: int,
        values: Mapping[str, Rational],
        pins: Sequence[Tuple[Position, Rational]] = (),
        anchors: Sequence[Tuple[str, Position]] = (),
        shadow: bool = False,
    ):
        constraints = _family_constraints(n, gtype, d, pins, anchors)
        family = solve_family(n, gtype, constraints)
        self._console.message(substitute(family, values).format())
        if shadow:
            self._console.message("# shadow")
            self._console.message(substitute_shadow(family, values).format())

    def gleason_bound(self, n: int, d: Optional[int] = None):
        bound = mallows_sloane(n)
        self._console.message(str(bound))
        if d is not None:
            verdict = "extremal" if is_extremal(n, d) else "not extremal"
            self._console.message(f"d={d} is {verdict}")

    def shadow(
        self,
        code: Code,
        search_target: Optional[int] = None,
        iterations: int = 100,
        seed: int = 0,
    ):
        decomposition = shadow_decompose(code)
        self._console.message(f"C0 dimension {decomposition.C0.k}")
        representatives = {
            "t1": decomposition.t1,
            "t2": decomposition.t2,
            "t3": decomposition.t3,
        }
        for label, word in representatives.items():
            self._console.message(f"{label} {','.join(map(str, word.support()))}")
        if decomposition.C0.k <= self._settings.bruteforce_cap:
            dist = shadow_distribution(
                code, cap=self._settings.bruteforce_cap, jobs=self._console.jobs
            )
            self._console.message(dist.format())
        elif search_target is not None:
            found = find_low_weight_shadow(code, search_target, iterations, seed)
            if found is None:
                self._console.message(f"no shadow vector of weight <= {search_target}")
            else:
                support = ",".join(map(str, found.support()))
                self._console.message(f"shadow weight {found.weight}: {support}")
        else:
            raise DimensionError(
                f"C0 has dimension {decomposition.C0.k}; pass a search target"
            )

    def neighbors(
        self, code: Code, budget: Optional[int] = None, prefix: Optional[str] = None
    ):
        pair = doubly_even_neighbors(code, budget=budget)
        for position, neighbor in enumerate(pair, start=1):
            self._console.message(f"{neighbor.name}: {_summary(neighbor)}")
            if prefix:
                path = f"{prefix}{position}.txt"
                with open(path, "w") as handle:
                    handle.write(serialize_generator_file(neighbor.standard_form))
                self._console.progress(f"Wrote {path}")

    def neighbor_x(self, code: Code, support_file: str, strict: bool = False):
        x = parse_support(_read(support_file), code.n)
        neighbor = neighbor_via_vector(code, x, name="neighbor", strict=strict)
        self._console.message(_summary(neighbor))
        verdict = "yes" if is_neighbor(code, neighbor) else "no"
        self._console.message(f"neighbor of input: {verdict}")

    def search(self, config: SearchConfig):
        def report(stats: CampaignStats):
            self._console.progress(
                f"drawn {stats.candidates_drawn}, screened {stats.screen_passed}, "
                f"accepted {stats.accepted}"
            )

        runner = CampaignRunner(config, self._console.jobs, progress=report)
        records, stats = asyncio.run(runner.run())
        for record in records:
            flag = " possibly-equivalent" if record.possibly_equivalent else ""
            self._console.message(f"{record.spec.line()} {record.key}{flag}")
        self._console.progress(stats.format())
