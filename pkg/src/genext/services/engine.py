"""
Computed Hilbert series in the exterior and square-free algebras.

Every dimension is a single rank: the degree-k piece of an ideal is the column
space of the stacked multiplication maps landing in degree k. Genericity is
modelled by random coefficients in F_p, which can only lose rank, so quotient
coefficients from a random trial never undershoot the generic value.
"""

import logging
import re
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass, field
from enum import StrEnum

import numpy as np

from ..algebra.combinatorics import (
    MAX_VARIABLES,
    Monomial,
    binomial,
    degree,
    mask_from_indices,
    subset_index,
    subsets,
    wedge_sign,
)
from ..algebra.linalg import FieldMatrix, PrimeField
from ..algebra.series import IntSeries, coeffwise_min
from ..config import MAX_MATRIX_ENTRIES, PRIME
from ..exceptions import DegreeRangeError, InfeasibleSizeError
from ..utils.cache_utils import get_cache_key, get_cached_profile, set_cached_profile
from ..utils.metrics_utils import track_metrics
from ..utils.seed_utils import derive_seed, trial_seeds

logger = logging.getLogger(__name__)


class AlgebraKind(StrEnum):
    """Ambient algebra: skew-commutative or commutative with squares killed."""

    EXTERIOR = "exterior"
    SQUAREFREE = "squarefree"


@dataclass(frozen=True)
class HomogeneousForm:
    """A degree-d element given by its nonzero coefficients (residues mod p)."""

    n: int
    d: int
    coeffs: Mapping[Monomial, int]
    seed: int | None = None

    def __post_init__(self) -> None:
        if not 1 <= self.d <= self.n <= MAX_VARIABLES:
            raise DegreeRangeError(
                f"need 1 <= d <= n <= {MAX_VARIABLES}, got n={self.n}, d={self.d}"
            )
        for mask in self.coeffs:
            if degree(mask) != self.d or mask >> self.n:
                raise DegreeRangeError(
                    f"monomial {mask:#b} is not of degree {self.d} in {self.n} variables"
                )

    @classmethod
    def from_terms(
        cls,
        n: int,
        d: int,
        terms: Iterable[tuple[int, Iterable[int]]],
        prime: int = PRIME,
    ) -> "HomogeneousForm":
        """
        Build a specific form from (coefficient, variable indices) pairs.

        Repeated monomials accumulate; coefficients vanishing mod p are dropped.
        """
        coeffs: dict[Monomial, int] = {}
        for coefficient, indices in terms:
            idx = list(indices)
            if len(set(idx)) != len(idx):
                raise DegreeRangeError(f"monomial {idx} is not square-free")
            mask = mask_from_indices(idx)
            coeffs[mask] = (coeffs.get(mask, 0) + coefficient) % prime
        return cls(n=n, d=d, coeffs={m: c for m, c in coeffs.items() if c})

    @classmethod
    def parse(cls, text: str, n: int, prime: int = PRIME) -> "HomogeneousForm":
        """
        Parse a form such as ``x1x2+x1x3-2x3x4``.

        Raises:
            DegreeRangeError: If the text is malformed or the terms have mixed degrees
        """
        body = text.replace(" ", "")
        matches = list(re.finditer(r"([+-]?)(\d*)((?:x\d+)+)", body))
        if not matches or "".join(m.group(0) for m in matches) != body:
            raise DegreeRangeError(f"cannot parse form {text!r}")
        terms = []
        for m in matches:
            magnitude = int(m.group(2)) if m.group(2) else 1
            sign = -1 if m.group(1) == "-" else 1
            indices = [int(v) for v in re.findall(r"x(\d+)", m.group(3))]
            terms.append((sign * magnitude, indices))
        degrees = {len(indices) for _, indices in terms}
        if len(degrees) != 1:
            raise DegreeRangeError(f"form {text!r} is not homogeneous")
        return cls.from_terms(n, degrees.pop(), terms, prime)

    def coefficient(self, mask: Monomial) -> int:
        return self.coeffs.get(mask, 0)


@dataclass(frozen=True)
class GenericForm(HomogeneousForm):
    """A form with every degree-d coefficient nonzero, drawn from a seed."""

    def __post_init__(self) -> None:
        super().__post_init__()
        if len(self.coeffs) != binomial(self.n, self.d) or not all(self.coeffs.values()):
            raise DegreeRangeError("a generic form needs every coefficient nonzero")


@dataclass(frozen=True)
class NumericalCharacter:
    """Generator degrees (d_1, ..., d_r) of an ideal, kept sorted."""

    degrees: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.degrees:
            raise DegreeRangeError("numerical character must be nonempty")
        if any(d < 1 for d in self.degrees):
            raise DegreeRangeError(f"degrees must be >= 1, got {list(self.degrees)}")
        object.__setattr__(self, "degrees", tuple(sorted(self.degrees)))

    @classmethod
    def of(cls, degrees: Iterable[int]) -> "NumericalCharacter":
        return cls(tuple(degrees))

    @classmethod
    def parse(cls, text: str) -> "NumericalCharacter":
        try:
            return cls(tuple(int(part) for part in text.split(",") if part.strip()))
        except ValueError as e:
            raise DegreeRangeError(f"bad degree list {text!r}") from e

    @property
    def is_principal(self) -> bool:
        return len(self.degrees) == 1

    def __str__(self) -> str:
        return ",".join(str(d) for d in self.degrees)


@dataclass(frozen=True)
class PrincipalSeries:
    """q, p and a of a principal ideal, all read off one rank profile."""

    n: int
    d: int
    ranks: tuple[int, ...]
    quotient: IntSeries = field(init=False)
    ideal: IntSeries = field(init=False)
    annihilator: IntSeries = field(init=False)

    def __post_init__(self) -> None:
        n, d = self.n, self.d
        ideal = IntSeries([0] * d + list(self.ranks))
        ann = [
            binomial(n, r) - self.ranks[r] if r <= n - d else binomial(n, r) for r in range(n + 1)
        ]
        object.__setattr__(self, "ideal", ideal)
        object.__setattr__(self, "quotient", IntSeries.binom_pow(n) - ideal)
        object.__setattr__(self, "annihilator", IntSeries(ann))

    @property
    def difference(self) -> IntSeries:
        """a - p."""
        return self.annihilator - self.ideal


# ----------------------------------------------------------------------
# forms and matrices
# ----------------------------------------------------------------------


def random_generic_form(n: int, d: int, seed: int, prime: int = PRIME) -> GenericForm:
    """
    Draw a form with uniform coefficients in [1, p).

    Args:
        n: Number of variables
        d: Degree
        seed: Reproducibility seed
        prime: Field characteristic

    Returns:
        GenericForm, identical for identical arguments

    Raises:
        DegreeRangeError: If d is outside 1..n or n above the variable cap
    """
    if not 1 <= d <= n <= MAX_VARIABLES:
        raise DegreeRangeError(f"need 1 <= d <= n <= {MAX_VARIABLES}, got n={n}, d={d}")
    rng = np.random.default_rng(seed)
    basis = subsets(n, d)
    values = rng.integers(1, prime, size=len(basis), dtype=np.int64)
    return GenericForm(n=n, d=d, coeffs=dict(zip(basis, (int(v) for v in values))), seed=seed)


def normal_form_quadric(n: int) -> HomogeneousForm:
    """x1x2 + x3x4 + ... ; a generic exterior quadric is equivalent to it."""
    if n < 2:
        raise DegreeRangeError(f"a quadric needs n >= 2, got {n}")
    terms = [(1, (2 * i + 1, 2 * i + 2)) for i in range(n // 2)]
    return HomogeneousForm.from_terms(n, 2, terms)


def mult_matrix(
    form: HomogeneousForm, r: int, kind: AlgebraKind, prime: int = PRIME
) -> FieldMatrix:
    """
    Matrix of g -> g·f from degree r to degree r+d.

    Rows are the degree-(r+d) monomials K, columns the degree-r monomials C,
    both in colex order. The exterior entry is wedge_sign(C, K\\C)·c_{K\\C}.

    Raises:
        DegreeRangeError: If r is outside 0..n
    """
    n, d = form.n, form.d
    if not 0 <= r <= n:
        raise DegreeRangeError(f"source degree {r} outside 0..{n}")
    field_ = PrimeField(prime)
    cols = subsets(n, r)
    if r + d > n:
        return FieldMatrix.zeros(field_, 0, len(cols))
    row_index = subset_index(n, r + d)
    triplets = []
    for j, c in enumerate(cols):
        for t, coefficient in form.coeffs.items():
            if c & t:
                continue
            sign = wedge_sign(c, t) if kind is AlgebraKind.EXTERIOR else 1
            triplets.append((row_index[c | t], j, sign * coefficient))
    return FieldMatrix.from_triplets(field_, len(row_index), len(cols), triplets)


# ----------------------------------------------------------------------
# feasibility
# ----------------------------------------------------------------------


def largest_matrix(n: int, degrees: Sequence[int]) -> tuple[int, int]:
    """Shape of the largest matrix an ideal computation would build."""
    best = (0, 0)
    for k in range(min(degrees), n + 1):
        rows = binomial(n, k)
        cols = sum(binomial(n, k - d) for d in degrees if d <= k)
        if rows * cols > best[0] * best[1]:
            best = (rows, cols)
    return best


def check_feasible(n: int, degrees: Sequence[int], limit: int = MAX_MATRIX_ENTRIES) -> None:
    """
    Refuse a computation whose largest matrix exceeds ``limit`` entries.

    Raises:
        InfeasibleSizeError: Naming the cell and the offending shape
    """
    rows, cols = largest_matrix(n, degrees)
    if rows * cols > limit:
        raise InfeasibleSizeError(n, tuple(degrees), rows, cols, limit)


# ----------------------------------------------------------------------
# principal ideals
# ----------------------------------------------------------------------


def form_rank_profile(
    form: HomogeneousForm, kind: AlgebraKind, prime: int = PRIME
) -> tuple[int, ...]:
    """Ranks of ·f from every degree r in 0..n-d."""
    return tuple(
        mult_matrix(form, r, kind, prime).rank(consume=True) for r in range(form.n - form.d + 1)
    )


@track_metrics("principal_rank_profile")
def principal_rank_profile(
    n: int, d: int, kind: AlgebraKind, seed: int, prime: int = PRIME
) -> tuple[int, ...]:
    """Rank profile of the generic form of generator 0 under ``seed`` (cached)."""
    key = get_cache_key("profile", n, d, kind.value, seed, prime)
    cached = get_cached_profile(key)
    if cached is not None:
        return cached
    form = random_generic_form(n, d, derive_seed(seed, "generator", 0), prime)
    profile = form_rank_profile(form, kind, prime)
    set_cached_profile(key, profile)
    return profile


def annihilator_series(
    n: int, d: int, kind: AlgebraKind, seed: int, prime: int = PRIME
) -> IntSeries:
    """a_{n,d}: kernel dimensions of ·f degree by degree."""
    return PrincipalSeries(n, d, principal_rank_profile(n, d, kind, seed, prime)).annihilator


def principal_series(
    n: int,
    d: int,
    kind: AlgebraKind,
    seed: int,
    trials: int = 1,
    prime: int = PRIME,
) -> PrincipalSeries:
    """
    q, p and a of a generic principal ideal over ``trials`` specialisations.

    The per-degree maximum rank over the trials is kept, which is the
    coefficientwise minimum of the quotient series.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    profiles = [
        principal_rank_profile(n, d, kind, trial_seed, prime)
        for trial_seed in trial_seeds(seed, n, (d,), trials)
    ]
    best = tuple(max(ranks) for ranks in zip(*profiles, strict=True))
    if any(profile != best for profile in profiles):
        logger.warning(
            "⚠️ Trials disagree at n=%s, d=%s (%s): keeping maximal ranks", n, d, kind
        )
    return PrincipalSeries(n, d, best)


# ----------------------------------------------------------------------
# arbitrary ideals
# ----------------------------------------------------------------------


def forms_ideal_series(
    forms: Sequence[HomogeneousForm], kind: AlgebraKind, prime: int = PRIME
) -> IntSeries:
    """Hilbert series of the ideal generated by explicit forms."""
    if not forms:
        return IntSeries()
    n = forms[0].n
    field_ = PrimeField(prime)
    dims = [0] * (n + 1)
    for k in range(min(f.d for f in forms), n + 1):
        target = binomial(n, k)
        if k > 0 and dims[k - 1] == binomial(n, k - 1):
            # the ideal already contains all of degree k-1, hence all of degree k
            dims[k] = target
            continue
        blocks = [mult_matrix(f, k - f.d, kind, prime) for f in forms if f.d <= k]
        dims[k] = FieldMatrix.hstack(field_, blocks).rank(consume=True)
    return IntSeries(dims)


@track_metrics("ideal_series")
def ideal_series(
    n: int,
    character: NumericalCharacter,
    kind: AlgebraKind,
    seed: int,
    prime: int = PRIME,
) -> IntSeries:
    """Hilbert series of (f_1, ..., f_r) for independent generic forms."""
    if max(character.degrees) > n:
        raise DegreeRangeError(f"degrees {list(character.degrees)} exceed n={n}")
    if character.is_principal:
        d = character.degrees[0]
        return PrincipalSeries(n, d, principal_rank_profile(n, d, kind, seed, prime)).ideal
    forms = [
        random_generic_form(n, d, derive_seed(seed, "generator", i), prime)
        for i, d in enumerate(character.degrees)
    ]
    return forms_ideal_series(forms, kind, prime)


def quotient_series(
    n: int,
    character: NumericalCharacter,
    kind: AlgebraKind,
    seed: int,
    prime: int = PRIME,
) -> IntSeries:
    """(1+t)^n minus the ideal series."""
    return IntSeries.binom_pow(n) - ideal_series(n, character, kind, seed, prime)


def form_quotient_series(form: HomogeneousForm, kind: AlgebraKind, prime: int = PRIME) -> IntSeries:
    """Quotient series for one explicit (possibly non-generic) form."""
    return IntSeries.binom_pow(form.n) - forms_ideal_series([form], kind, prime)


def generic_min(series_list: Sequence[IntSeries]) -> IntSeries:
    """Coefficientwise minimum over random trials: the reported generic series."""
    return coeffwise_min(series_list)


def generic_quotient(
    n: int,
    character: NumericalCharacter,
    kind: AlgebraKind,
    seed: int,
    trials: int = 1,
    prime: int = PRIME,
) -> IntSeries:
    """Generic quotient series of a character over ``trials`` specialisations."""
    if character.is_principal:
        return principal_series(n, character.degrees[0], kind, seed, trials, prime).quotient
    results = [
        quotient_series(n, character, kind, trial_seed, prime)
        for trial_seed in trial_seeds(seed, n, character.degrees, trials)
    ]
    best = generic_min(results)
    if any(series != best for series in results):
        logger.warning("⚠️ Trials disagree at n=%s, character (%s)", n, character)
    return best
