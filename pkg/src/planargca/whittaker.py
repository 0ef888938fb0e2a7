"""Whittaker data and the modules they induce.

For integers m >= 1, n >= 0, a Whittaker datum assigns exact scalar values
psi(g) to the generators of the subalgebra spanned by L_{m+i}, H_{m+i},
I_{n+i}, J_{n+i} (i >= 0) together with the three centrals.  Because psi
must kill every bracket inside that subalgebra, the values at L-index
2m+1 and above, H-index 2m and above, and I/J-index m+n and above are
forced to vanish; ``validate_whittaker`` rejects anything else.

The induced cyclic module has a PBW basis of monomials in the remaining
("free") generators, L_k/H_k with k < m and I_k/J_k with k < n, applied to
the cyclic vector.  ``whittaker_act`` computes a generator action by normal
ordering: factors belonging to the subalgebra (or central) are commuted to
the right, picking up bracket terms on the way, and evaluate to their
psi-value once they reach the cyclic vector.  Every bracket term is a
strictly shorter word, so the rewriting terminates and lands back on the
free PBW basis.

Degree bookkeeping uses exponent vectors written highest index first, so a
block of length l reads (e_{l-1}, ..., e_1, e_0).  The weight of such a
vector is sum_k (l - k) * e_k; the reverse lexicographic order compares
entries from e_0 upward; and the principal order on pairs compares total
weight first, then the second block, then the first, all reverse
lexicographically.  This is exactly the order in which the degree-drop
checks predict leading terms.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Mapping, Optional, Tuple, Union

from .algebra import (
    Element,
    Generator,
    H,
    I,
    IJTranslation,
    J,
    L,
    bracket_basis,
    gen_key,
    gen_str,
    parse_gen,
)
from .linalg import Matrix, SparseEchelon, matrix_solve
from .pbw import MONOMIAL_ONE, PBWMonomial
from .scalars import ONE, ZERO, Scalar, parse_scalar

__all__ = [
    "DerivedAlgebraViolation",
    "OutOfSubalgebra",
    "LengthMismatch",
    "UnsupportedMonomial",
    "ZeroVector",
    "PreconditionViolated",
    "WhittakerDatum",
    "validate_whittaker",
    "ModuleVector",
    "whittaker_act",
    "act_shifted",
    "annihilation_bound",
    "weight",
    "reverse_lex_compare",
    "principal_compare",
    "epsilon",
    "vector_degree",
    "DegreeReport",
    "check_degree_reduction",
    "SearchReport",
    "singular_vector_search",
    "twist_matrices",
    "TwistResult",
    "solve_twist",
    "Psi14Result",
    "psi14_matrix",
    "example_psi14_witness",
]


class DerivedAlgebraViolation(ValueError):
    """A value was assigned at a position forced to vanish."""


class OutOfSubalgebra(ValueError):
    """A value was assigned to a generator outside the acting subalgebra."""


class LengthMismatch(ValueError):
    """Exponent vectors of different lengths were compared."""


class UnsupportedMonomial(ValueError):
    """A vector strays outside the requested generator block."""


class ZeroVector(ValueError):
    """The zero vector has no degree."""


class PreconditionViolated(ValueError):
    """An operation was invoked outside its stated hypotheses."""


class WhittakerDatum:
    """Validated Whittaker values; unassigned positions default to zero."""

    __slots__ = ("m", "n", "values")

    def __init__(self, m: int, n: int, values: Dict[Generator, Scalar]):
        self.m = m
        self.n = n
        self.values = {g: c for g, c in values.items() if c}

    def in_subalgebra(self, g: Generator) -> bool:
        if g.is_central:
            return True
        if g.family in ("L", "H"):
            return g.index >= self.m
        return g.index >= self.n

    def forced_zero(self, g: Generator) -> bool:
        """Positions killed because psi vanishes on brackets."""
        if g.is_central:
            return False
        if g.family == "L":
            return g.index >= 2 * self.m + 1
        if g.family == "H":
            return g.index >= 2 * self.m
        return g.index >= self.m + self.n

    def is_free(self, g: Generator) -> bool:
        return not g.is_central and not self.in_subalgebra(g)

    def psi(self, g: Generator) -> Scalar:
        """Stored value, defaulting to zero for anything unassigned."""
        return self.values.get(g, ZERO)

    def psi_element(self, element: Element) -> Scalar:
        total = ZERO
        for g, coeff in element.terms.items():
            total = total + coeff * self.psi(g)
        return total

    def to_json(self) -> dict:
        indexed = {}
        centrals = {}
        for g in sorted(self.values, key=gen_key):
            if g.is_central:
                centrals[gen_str(g)] = str(self.values[g])
            else:
                indexed[gen_str(g)] = str(self.values[g])
        return {"m": self.m, "n": self.n, "values": indexed, "centrals": centrals}

    def __repr__(self) -> str:
        body = ", ".join(
            f"{gen_str(g)}={c}" for g, c in sorted(
                self.values.items(), key=lambda item: gen_key(item[0])
            )
        )
        return f"WhittakerDatum(m={self.m}, n={self.n}, {body})"


RawValues = Mapping[Union[Generator, str], Union[Scalar, str, int]]


def validate_whittaker(values: RawValues, m: int, n: int) -> WhittakerDatum:
    """Check and normalize raw Whittaker values.

    Accepts generator objects or their string names as keys, and scalars,
    scalar strings, or ints as values.  Rejects values outside the acting
    subalgebra and nonzero values at the forced-vanishing positions.
    """
    if m < 1:
        raise PreconditionViolated("m must be a positive integer")
    if n < 0:
        raise PreconditionViolated("n must be non-negative")
    normalized: Dict[Generator, Scalar] = {}
    for key, raw in values.items():
        g = parse_gen(key) if isinstance(key, str) else key
        coeff = (
            raw
            if isinstance(raw, Scalar)
            else parse_scalar(str(raw))
        )
        if not coeff:
            continue
        if g in normalized:
            raise ValueError(f"duplicate value for {gen_str(g)}")
        normalized[g] = coeff
    datum = WhittakerDatum(m, n, {})
    for g, coeff in normalized.items():
        if not datum.in_subalgebra(g):
            raise OutOfSubalgebra(
                f"{gen_str(g)} lies outside the acting subalgebra for "
                f"(m, n) = ({m}, {n})"
            )
        if datum.forced_zero(g):
            raise DerivedAlgebraViolation(
                f"psi({gen_str(g)}) must vanish for (m, n) = ({m}, {n})"
            )
    return WhittakerDatum(m, n, normalized)


class ModuleVector:
    """Element of the induced module: free PBW monomials applied to the
    cyclic vector, with scalar coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: Dict[PBWMonomial, Scalar] | None = None):
        self.terms = {mono: c for mono, c in (terms or {}).items() if c}

    @staticmethod
    def zero() -> "ModuleVector":
        return ModuleVector()

    @staticmethod
    def cyclic(coeff: Scalar = ONE) -> "ModuleVector":
        return ModuleVector({MONOMIAL_ONE: coeff})

    @staticmethod
    def single(mono: PBWMonomial, coeff: Scalar = ONE) -> "ModuleVector":
        return ModuleVector({mono: coeff})

    def __add__(self, other: "ModuleVector") -> "ModuleVector":
        out = dict(self.terms)
        for mono, coeff in other.terms.items():
            out[mono] = out.get(mono, ZERO) + coeff
        return ModuleVector(out)

    def __sub__(self, other: "ModuleVector") -> "ModuleVector":
        out = dict(self.terms)
        for mono, coeff in other.terms.items():
            out[mono] = out.get(mono, ZERO) - coeff
        return ModuleVector(out)

    def __neg__(self) -> "ModuleVector":
        return ModuleVector({m: -c for m, c in self.terms.items()})

    def scale(self, coeff: Scalar) -> "ModuleVector":
        if not coeff:
            return ModuleVector()
        return ModuleVector({m: c * coeff for m, c in self.terms.items()})

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ModuleVector):
            return NotImplemented
        return self.terms == other.terms

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        keys = sorted(self.terms, key=lambda m: (m.length(), str(m)))
        return " + ".join(f"({self.terms[m]})*{m}.w" for m in keys)

    def __repr__(self) -> str:
        return f"ModuleVector({str(self)})"

    def to_json(self) -> Dict[str, str]:
        keys = sorted(self.terms, key=lambda m: (m.length(), str(m)))
        return {str(m): str(self.terms[m]) for m in keys}

    @staticmethod
    def from_json(data: Mapping[str, Union[str, int]]) -> "ModuleVector":
        return ModuleVector(
            {
                PBWMonomial.parse(k): parse_scalar(str(v))
                for k, v in data.items()
            }
        )


def _evaluable(datum: WhittakerDatum, g: Generator) -> bool:
    return g.is_central or datum.in_subalgebra(g)


def _evaluate_word(
    datum: WhittakerDatum,
    coeff: Scalar,
    word: Tuple[Generator, ...],
    out: Dict[PBWMonomial, Scalar],
) -> None:
    """Accumulate the normal form of ``coeff * word . w`` into ``out``.

    Worklist rewriting: trailing subalgebra factors evaluate immediately;
    a subalgebra factor stuck left of free ones is swapped rightward,
    spawning one shorter bracket word per structure-constant term; pure
    free words are sorted into canonical order the same way.
    """
    stack: List[Tuple[Scalar, Tuple[Generator, ...]]] = [(coeff, word)]
    while stack:
        c, w = stack.pop()
        # Evaluate trailing factors greedily; zero psi-values kill the branch.
        while w and c and _evaluable(datum, w[-1]):
            c = c * datum.psi(w[-1])
            w = w[:-1]
        if not c:
            continue
        pos = None
        for i in range(len(w) - 2, -1, -1):
            if _evaluable(datum, w[i]):
                pos = i
                break
        if pos is None:
            # Pure free word: straighten by the canonical order.
            for i in range(len(w) - 1):
                if gen_key(w[i]) > gen_key(w[i + 1]):
                    pos = i
                    break
            if pos is None:
                mono = PBWMonomial.from_word(w)
                updated = out.get(mono, ZERO) + c
                if updated:
                    out[mono] = updated
                else:
                    out.pop(mono, None)
                continue
        g, h = w[pos], w[pos + 1]
        stack.append((c, w[:pos] + (h, g) + w[pos + 2:]))
        for gen, factor in bracket_basis(g, h).terms.items():
            stack.append((c * factor, w[:pos] + (gen,) + w[pos + 2:]))


def whittaker_act(
    datum: WhittakerDatum, g: Generator, v: ModuleVector
) -> ModuleVector:
    """Action of a generator on a module vector."""
    out: Dict[PBWMonomial, Scalar] = {}
    for mono, coeff in v.terms.items():
        _evaluate_word(datum, coeff, (g,) + mono.word(), out)
    return ModuleVector(out)


def act_shifted(
    datum: WhittakerDatum, g: Generator, v: ModuleVector
) -> ModuleVector:
    """``(g - psi(g)) . v``, the operator every Whittaker vector must kill."""
    return whittaker_act(datum, g, v) - v.scale(datum.psi(g))


def annihilation_bound(datum: WhittakerDatum, v: ModuleVector) -> int:
    """An index N such that every generator of index above N kills ``v``.

    Any surviving term of a high-index action ends in an evaluated factor
    whose index is the acting index plus a sum of factor indices of the
    monomial; only negative factor indices can pull it down, and it must
    land at or below the last nonzero psi-position, max(2m, m+n-1), to
    survive (central contributions need the total to reach zero, which is
    even lower).  The bound below makes both impossible.
    """
    base = max(2 * datum.m, datum.m + datum.n - 1)
    best = base
    for mono in v.terms:
        drop = sum(
            -g.index * exp
            for g, exp in mono.factors
            if g.index is not None and g.index < 0
        )
        best = max(best, base + drop)
    return best


# -- exponent-vector order machinery ----------------------------------------

ExponentVector = Tuple[int, ...]


def weight(vec: ExponentVector) -> int:
    """Weighted degree: the entry for index k counts with multiplicity l-k.

    Entries are written highest index first, so position p from the left
    carries multiplicity p+1.
    """
    if any(entry < 0 for entry in vec):
        raise ValueError("exponent entries must be non-negative")
    return sum((position + 1) * entry for position, entry in enumerate(vec))


def reverse_lex_compare(a: ExponentVector, b: ExponentVector) -> int:
    """-1, 0, or +1; the entry at index 0 (rightmost) decides first."""
    if len(a) != len(b):
        raise LengthMismatch(f"lengths {len(a)} and {len(b)} differ")
    for x, y in zip(reversed(a), reversed(b)):
        if x != y:
            return 1 if x > y else -1
    return 0


PairOfVectors = Tuple[ExponentVector, ExponentVector]


def principal_compare(p1: PairOfVectors, p2: PairOfVectors) -> int:
    """Order on pairs (first, second): total weight, then the second block
    reverse lexicographically, then the first."""
    (j1, i1), (j2, i2) = p1, p2
    if len(j1) != len(i1) or len(j2) != len(i2) or len(j1) != len(j2):
        raise LengthMismatch("pair blocks must share one length")
    w1 = weight(i1) + weight(j1)
    w2 = weight(i2) + weight(j2)
    if w1 != w2:
        return 1 if w1 > w2 else -1
    by_second = reverse_lex_compare(i1, i2)
    if by_second:
        return by_second
    return reverse_lex_compare(j1, j2)


def epsilon(length: int, k: int) -> ExponentVector:
    """Unit vector with a single 1 at index k (position k from the right)."""
    if not 0 <= k < length:
        raise ValueError("index out of range")
    out = [0] * length
    out[length - 1 - k] = 1
    return tuple(out)


def _vec_sub(a: ExponentVector, b: ExponentVector) -> ExponentVector:
    out = tuple(x - y for x, y in zip(a, b))
    if any(entry < 0 for entry in out):
        raise ValueError("exponent subtraction went negative")
    return out


_BLOCKS = {"JI": ("J", "I"), "HL": ("H", "L")}


def vector_degree(
    v: ModuleVector, block: str, block_length: int
) -> PairOfVectors:
    """Principal-order maximum of the support, as a pair of exponent vectors.

    The vector must be supported on the requested two-family block with
    indices in [0, block_length); the first component of the result collects
    the first family's exponents, the second the second family's.
    """
    if block not in _BLOCKS:
        raise ValueError(f"unknown block {block!r}")
    if not v:
        raise ZeroVector("the zero vector has no degree")
    fam_first, fam_second = _BLOCKS[block]
    best: Optional[PairOfVectors] = None
    for mono in v.terms:
        first = [0] * block_length
        second = [0] * block_length
        for g, exp in mono.factors:
            if g.index is None or not 0 <= g.index < block_length:
                raise UnsupportedMonomial(f"{mono} strays outside the block")
            if g.family == fam_first:
                first[block_length - 1 - g.index] = exp
            elif g.family == fam_second:
                second[block_length - 1 - g.index] = exp
            else:
                raise UnsupportedMonomial(f"{mono} strays outside the block")
        pair = (tuple(first), tuple(second))
        if best is None or principal_compare(pair, best) > 0:
            best = pair
    return best


# -- degree-drop checks -------------------------------------------------------

DEGREE_CASES = ("JI_j_nonzero", "JI_i_only", "HL_h_nonzero", "HL_l_only")


@dataclass
class DegreeReport:
    case: str
    degree_before: PairOfVectors
    predicted: PairOfVectors
    operators: List[str]
    degrees_after: List[Optional[PairOfVectors]]
    branch: Optional[str]
    ok: bool

    def to_json(self) -> dict:
        return {
            "case": self.case,
            "degree_before": [list(x) for x in self.degree_before],
            "predicted": [list(x) for x in self.predicted],
            "operators": self.operators,
            "degrees_after": [
                None if d is None else [list(x) for x in d]
                for d in self.degrees_after
            ],
            "branch": self.branch,
            "ok": self.ok,
        }


def _lowest_nonzero_index(vec: ExponentVector) -> int:
    for k in range(len(vec)):
        if vec[len(vec) - 1 - k]:
            return k
    raise ValueError("vector is zero")


def _highest_nonzero_index(vec: ExponentVector) -> int:
    for k in range(len(vec) - 1, -1, -1):
        if vec[len(vec) - 1 - k]:
            return k
    raise ValueError("vector is zero")


def _require_degree_hypotheses(datum: WhittakerDatum, block: str) -> None:
    m, n = datum.m, datum.n
    if (m + n) % 2 != 0:
        raise PreconditionViolated("m and n must have the same parity")
    top = m + n - 1
    if not datum.psi(I(top)) or not datum.psi(J(top)):
        raise PreconditionViolated(
            f"psi(I[{top}]) and psi(J[{top}]) must both be nonzero"
        )
    if block == "HL":
        # The leading-term bookkeeping in the HL block assumes every L/H
        # value at index m+n and above has been normalized away.
        for p in range(m + n, 2 * m + 1):
            if datum.psi(L(p)):
                raise PreconditionViolated(f"psi(L[{p}]) must vanish")
        for p in range(m + n, 2 * m):
            if datum.psi(H(p)):
                raise PreconditionViolated(f"psi(H[{p}]) must vanish")


def check_degree_reduction(
    datum: WhittakerDatum, v: ModuleVector, case: str
) -> DegreeReport:
    """Apply the operator the degree-drop statement prescribes and compare.

    The four cases split by block (J/I exponents versus H/L exponents) and
    by whether the first block of the degree is nonzero.  For the *_only
    cases two candidate operators are listed and at least one of them must
    achieve the predicted degree; the report records which branch worked.
    """
    if case not in DEGREE_CASES:
        raise ValueError(f"unknown case {case!r}")
    m, n = datum.m, datum.n
    block = "JI" if case.startswith("JI") else "HL"
    block_length = n if block == "JI" else m
    if block_length < 1:
        raise PreconditionViolated(f"the {block} block is empty")
    _require_degree_hypotheses(datum, block)
    degree = vector_degree(v, block, block_length)
    first, second = degree
    if not any(first) and not any(second):
        raise PreconditionViolated("vector is a multiple of the cyclic vector")
    top = m + n - 1

    if case in ("JI_j_nonzero", "HL_h_nonzero"):
        if not any(first):
            raise PreconditionViolated(f"case {case} needs a nonzero first block")
        r = _lowest_nonzero_index(first)
        op = H(top - r) if block == "JI" else I(top - r)
        predicted = (_vec_sub(first, epsilon(block_length, r)), second)
        result = act_shifted(datum, op, v)
        after = (
            vector_degree(result, block, block_length) if result else None
        )
        return DegreeReport(
            case=case,
            degree_before=degree,
            predicted=predicted,
            operators=[gen_str(op)],
            degrees_after=[after],
            branch=None,
            ok=after == predicted,
        )

    if any(first):
        raise PreconditionViolated(f"case {case} needs a vanishing first block")
    if not any(second):
        raise PreconditionViolated(f"case {case} needs a nonzero second block")
    s = _highest_nonzero_index(second)
    ops = (
        [H(top - s), L(top - s)] if block == "JI" else [I(top - s), J(top - s)]
    )
    predicted = (tuple([0] * block_length), _vec_sub(second, epsilon(block_length, s)))
    degrees_after: List[Optional[PairOfVectors]] = []
    branch = None
    for op in ops:
        result = act_shifted(datum, op, v)
        after = vector_degree(result, block, block_length) if result else None
        degrees_after.append(after)
        if branch is None and after == predicted:
            branch = gen_str(op)
    return DegreeReport(
        case=case,
        degree_before=degree,
        predicted=predicted,
        operators=[gen_str(op) for op in ops],
        degrees_after=degrees_after,
        branch=branch,
        ok=branch is not None,
    )


# -- singular-vector search ---------------------------------------------------


def generator_search_weight(datum: WhittakerDatum, g: Generator) -> int:
    """Enumeration weight of a free generator: distance to its threshold."""
    if not datum.is_free(g):
        raise ValueError(f"{gen_str(g)} is not a free generator")
    threshold = datum.m if g.family in ("L", "H") else datum.n
    return threshold - g.index


def _free_generators(
    datum: WhittakerDatum, weight_bound: int
) -> List[Tuple[Generator, int]]:
    out: List[Tuple[Generator, int]] = []
    for fam in ("J", "I", "H", "L"):
        threshold = datum.n if fam in ("I", "J") else datum.m
        for wt in range(1, weight_bound + 1):
            out.append((Generator(fam, threshold - wt), wt))
    out.sort(key=lambda pair: gen_key(pair[0]))
    return out


def _monomials_up_to_weight(
    datum: WhittakerDatum, weight_bound: int
) -> List[Tuple[PBWMonomial, int]]:
    """All nonempty free monomials of enumeration weight up to the bound.

    One exponent assignment per leaf of the recursion, so every monomial
    appears exactly once.
    """
    gens = _free_generators(datum, weight_bound)
    found: List[Tuple[PBWMonomial, int]] = []

    def build(position: int, budget: int, factors: List[Tuple[Generator, int]]):
        if position == len(gens):
            if factors:
                found.append(
                    (PBWMonomial(tuple(factors)), weight_bound - budget)
                )
            return
        g, wt = gens[position]
        build(position + 1, budget, factors)
        exp = 1
        while wt * exp <= budget:
            build(position + 1, budget - wt * exp, factors + [(g, exp)])
            exp += 1

    build(0, weight_bound, [])
    return found


@dataclass
class SearchReport:
    found: bool
    witness: Optional[ModuleVector]
    weight_bound: int
    index_max: int
    basis_size: int
    operators: int
    spot_check_ok: bool

    def to_json(self) -> dict:
        return {
            "found": self.found,
            "witness": self.witness.to_json() if self.witness else None,
            "weight_bound": self.weight_bound,
            "index_max": self.index_max,
            "basis_size": self.basis_size,
            "operators": self.operators,
            "spot_check_ok": self.spot_check_ok,
        }


def _search_operators(
    datum: WhittakerDatum, index_max: int
) -> List[Generator]:
    ops: List[Generator] = []
    for fam in ("L", "H"):
        ops.extend(Generator(fam, p) for p in range(datum.m, index_max + 1))
    for fam in ("I", "J"):
        ops.extend(Generator(fam, p) for p in range(datum.n, index_max + 1))
    return ops


def singular_vector_search(
    datum: WhittakerDatum, weight_bound: int
) -> SearchReport:
    """Search for a Whittaker vector independent of the cyclic vector.

    Enumerates the finite basis of free monomials up to the weight bound,
    assembles the exact linear system demanding that every subalgebra
    generator act by its psi-value, and extracts the kernel vector at the
    first free column of the reduced system.  Checking generators up to
    2m + 2n + weight_bound + 2 suffices: anything higher straightens into
    factors beyond the forced-vanishing thresholds (spot-checked at run
    time on three higher indices per family).  The returned witness, if
    any, is normalized so its first coefficient in column order is 1 and
    contains no component along the cyclic vector.
    """
    index_max = 2 * datum.m + 2 * datum.n + weight_bound + 2
    enumerated = _monomials_up_to_weight(datum, weight_bound)
    columns = sorted(
        ((mono, wt) for mono, wt in enumerated),
        key=lambda pair: (pair[1], str(pair[0])),
    )
    column_index = {mono: i for i, (mono, _) in enumerate(columns)}
    operators = _search_operators(datum, index_max)

    # Rows are indexed by (operator, output monomial); outputs always stay
    # within the enumerated weight range plus the empty monomial.
    rows: Dict[Tuple[str, str], Dict[int, Scalar]] = {}
    for col, (mono, _) in enumerate(columns):
        base = ModuleVector.single(mono)
        for op in operators:
            shifted = act_shifted(datum, op, base)
            for out_mono, coeff in shifted.terms.items():
                key = (gen_str(op), str(out_mono))
                rows.setdefault(key, {})[col] = coeff

    echelon = SparseEchelon(full_reduce=True)
    for key in sorted(rows):
        echelon.insert(rows[key])
    kernel = echelon.kernel_vector_at_first_free_column(len(columns))

    witness = None
    if kernel is not None:
        lead = min(kernel)
        scale = kernel[lead].inverse()
        witness = ModuleVector(
            {columns[col][0]: coeff * scale for col, coeff in kernel.items()}
        )
        for op in operators:
            if act_shifted(datum, op, witness):
                raise AssertionError(
                    "kernel vector failed re-verification; this is a bug"
                )

    spot_ok = True
    for fam in ("L", "H", "I", "J"):
        for extra in range(1, 4):
            op = Generator(fam, index_max + extra)
            for mono, _ in columns:
                if act_shifted(datum, op, ModuleVector.single(mono)):
                    spot_ok = False
    if not spot_ok:
        raise AssertionError(
            "a generator above the search index bound acted nontrivially"
        )

    return SearchReport(
        found=witness is not None,
        witness=witness,
        weight_bound=weight_bound,
        index_max=index_max,
        basis_size=len(columns),
        operators=len(operators),
        spot_check_ok=spot_ok,
    )


# -- the normalizing twist ----------------------------------------------------


def _alpha_beta(datum: WhittakerDatum):
    def alpha(p: int) -> Scalar:
        return ZERO if p < datum.n else datum.psi(I(p))

    def beta(p: int) -> Scalar:
        return ZERO if p < datum.n else datum.psi(J(p))

    return alpha, beta


def twist_matrices(datum: WhittakerDatum) -> Tuple[Matrix, Matrix, Matrix, Matrix]:
    """The four upper-triangular blocks of the normalization system.

    Size is (m-n+1) square; entry (t, s) with s >= t reads, with
    q = m+n-1-(s-t) and alpha_p, beta_p the I/J values,

        A: (m+n+1+t+s) * alpha_q      B: (m+n+1+t+s) * beta_q
        C: -alpha_q                   D: beta_q

    and alpha/beta below index n count as zero (covers n = 0).
    """
    m, n = datum.m, datum.n
    if m < n:
        raise PreconditionViolated("twist normalization requires m >= n")
    alpha, beta = _alpha_beta(datum)
    top = m + n - 1
    if not alpha(top) or not beta(top):
        raise PreconditionViolated(
            f"psi(I[{top}]) and psi(J[{top}]) must both be nonzero"
        )
    size = m - n + 1

    def build(entry) -> Matrix:
        return Matrix(
            [
                [entry(t, s) if s >= t else ZERO for s in range(size)]
                for t in range(size)
            ]
        )

    mat_a = build(lambda t, s: Scalar(m + n + 1 + t + s) * alpha(top - (s - t)))
    mat_b = build(lambda t, s: Scalar(m + n + 1 + t + s) * beta(top - (s - t)))
    mat_c = build(lambda t, s: -alpha(top - (s - t)))
    mat_d = build(lambda t, s: beta(top - (s - t)))
    return mat_a, mat_b, mat_c, mat_d


@dataclass
class TwistResult:
    a: List[Scalar]
    b: List[Scalar]
    translation: IJTranslation
    twisted: WhittakerDatum

    def to_json(self) -> dict:
        return {
            "a": [str(value) for value in self.a],
            "b": [str(value) for value in self.b],
            "x": self.translation.element.to_json(),
            "twisted": self.twisted.to_json(),
        }


def solve_twist(datum: WhittakerDatum) -> TwistResult:
    """Normalize the L/H values at index m+n and above to zero.

    Solves the block system for the translation coefficients, forms the
    element x = sum_s (-a_s I[-s-1] - b_s J[-s-1]), and rebuilds the datum
    through the induced automorphism y -> y + [x, y].  The I/J and central
    values are untouched; the resulting datum satisfies the normalization
    by construction, which is asserted before returning.
    """
    m, n = datum.m, datum.n
    mat_a, mat_b, mat_c, mat_d = twist_matrices(datum)
    size = m - n + 1
    block = Matrix(
        [
            list(mat_a.rows[t]) + list(mat_b.rows[t])
            for t in range(size)
        ]
        + [
            list(mat_c.rows[t]) + list(mat_d.rows[t])
            for t in range(size)
        ]
    )
    rhs = [datum.psi(L(m + n + t)) for t in range(size)] + [
        datum.psi(H(m + n + t)) for t in range(size)
    ]
    solution = matrix_solve(block, rhs)
    coeff_a = solution[:size]
    coeff_b = solution[size:]

    element = Element.zero()
    for s in range(size):
        element = element + Element(
            {I(-s - 1): -coeff_a[s], J(-s - 1): -coeff_b[s]}
        )
    translation = IJTranslation(element)

    twisted_values: Dict[Generator, Scalar] = {}
    for g, coeff in datum.values.items():
        if g.is_central or g.family in ("I", "J"):
            twisted_values[g] = coeff
    for p in range(m, 2 * m + 1):
        value = datum.psi_element(translation.apply(L(p)))
        if value:
            twisted_values[L(p)] = value
    for p in range(m, 2 * m):
        value = datum.psi_element(translation.apply(H(p)))
        if value:
            twisted_values[H(p)] = value
    twisted = validate_whittaker(twisted_values, m, n)

    for p in range(m + n, 2 * m + 1):
        if twisted.psi(L(p)):
            raise AssertionError("twist failed to clear an L value; bug")
    for p in range(m + n, 2 * m):
        if twisted.psi(H(p)):
            raise AssertionError("twist failed to clear an H value; bug")
    return TwistResult(
        a=coeff_a, b=coeff_b, translation=translation, twisted=twisted
    )


# -- the five-parameter witness family at (m, n) = (1, 4) ----------------------


@dataclass
class Psi14Result:
    matrix: Matrix
    coefficients: List[Scalar]
    witness: ModuleVector
    datum: WhittakerDatum
    verified: bool

    def to_json(self) -> dict:
        return {
            "matrix": [
                [str(entry) for entry in row] for row in self.matrix.rows
            ],
            "coefficients": [str(c) for c in self.coefficients],
            "witness": self.witness.to_json(),
            "verified": self.verified,
        }


def psi14_matrix(alpha: Scalar, beta: Scalar) -> Matrix:
    """Constraint matrix for the five-parameter candidate at (m, n) = (1, 4).

    Columns weight the candidate (a1 I[2] + a2 J[2] + a3 I[3]^2 + a4 J[3]^2
    + a5 J[3] I[3]) . w; rows are the H[2], H[1] and L[1] constraints split
    over the cyclic, I[3] and J[3] output components.
    """
    two_alpha = Scalar(2) * alpha
    four_alpha = Scalar(4) * alpha
    two_beta = Scalar(2) * beta
    four_beta = Scalar(4) * beta
    return Matrix(
        [
            [alpha, -beta, ZERO, ZERO, ZERO],
            [ONE, ZERO, two_alpha, ZERO, -beta],
            [ONE, ZERO, four_alpha, ZERO, two_beta],
            [ZERO, -ONE, ZERO, -two_beta, alpha],
            [ZERO, ONE, ZERO, four_beta, two_alpha],
        ]
    )


def example_psi14_witness(alpha: Scalar, beta: Scalar) -> Psi14Result:
    """Build the singular 5x5 system at (m, n) = (1, 4) and verify a witness.

    Requires alpha * beta nonzero.  The kernel of the matrix supplies the
    coefficients; the resulting vector is checked to be a genuine Whittaker
    vector by applying every shifted generator of the acting subalgebra up
    to a safely large index.
    """
    if not alpha or not beta:
        raise PreconditionViolated("alpha and beta must both be nonzero")
    from .linalg import matrix_nullspace

    datum = validate_whittaker({I(4): alpha, J(4): beta}, 1, 4)
    matrix = psi14_matrix(alpha, beta)
    kernel = matrix_nullspace(matrix)
    if not kernel:
        raise AssertionError("the candidate matrix was unexpectedly injective")
    coefficients = kernel[0]
    a1, a2, a3, a4, a5 = coefficients
    witness = ModuleVector(
        {
            PBWMonomial(((I(2), 1),)): a1,
            PBWMonomial(((J(2), 1),)): a2,
            PBWMonomial(((I(3), 2),)): a3,
            PBWMonomial(((J(3), 2),)): a4,
            PBWMonomial(((J(3), 1), (I(3), 1))): a5,
        }
    )
    verified = True
    for op in _search_operators(datum, 12):
        if act_shifted(datum, op, witness):
            verified = False
    if not verified:
        raise AssertionError("the kernel vector is not a Whittaker vector")
    return Psi14Result(
        matrix=matrix,
        coefficients=coefficients,
        witness=witness,
        datum=datum,
        verified=verified,
    )
