"""
Machine checks of the identities satisfied by Jensen solutions

Each check returns a CheckResult. A failing result always carries a
counterexample with element indices (and display names) that can be fed back
into the same identity to see it fail. A check whose precondition does not
hold is reported as skipped, never as failed.
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Callable, Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from config.constants import DEFAULT_MAX_ENUM, MAX_DICHOTOMY_ORDER
from core.abelian import AbElement, AbelianTarget, hom_count_from_factors
from core.errors import ConsistencyError, InvalidInputError
from core.groups import (
    Element,
    FiniteGroup,
    InvolutionSet,
    abelianization,
    build_dihedral,
    commutator_subgroup,
    involutions,
    subgroup_closure,
    word_lengths,
)
from core.jensen_solver import (
    EquationKind,
    GroupMap,
    brute_force_solutions,
    find_additivity_failure,
    find_violation,
    hom_space,
    is_homomorphism,
    is_solution,
    solve,
    spaces_equal,
)
from core.sr2 import Sr2Report, check_sr2, default_involutions, dihedral_odd_witness, find_square_root, sn_witness

logger = logging.getLogger(__name__)


class CheckStatus(str, Enum):
    PASS = "pass"
    FAIL = "fail"
    SKIP = "skip"


@dataclass
class CheckResult:
    check_id: str
    instance: Dict[str, Any]
    status: CheckStatus
    counterexample: Optional[Dict[str, Any]] = None
    details: Dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.status == CheckStatus.PASS


def instance_of(group: FiniteGroup, target: Optional[AbelianTarget] = None, **params) -> Dict[str, Any]:
    return {
        "group": group.spec,
        "target": target.spec if target is not None else None,
        "params": params,
    }


def _passed(check_id: str, instance: Dict[str, Any], **details) -> CheckResult:
    return CheckResult(check_id, instance, CheckStatus.PASS, details=details)


def _failed(check_id: str, instance: Dict[str, Any], counterexample: Dict[str, Any], **details) -> CheckResult:
    return CheckResult(check_id, instance, CheckStatus.FAIL, counterexample=counterexample, details=details)


def _skipped(check_id: str, instance: Dict[str, Any], reason: str) -> CheckResult:
    return CheckResult(check_id, instance, CheckStatus.SKIP, details={"reason": reason})


def _elements(group: FiniteGroup, **indices: Element) -> Dict[str, Any]:
    """Counterexample entries: both the index and the display name of each element"""
    out: Dict[str, Any] = {}
    for label, g in indices.items():
        out[label] = int(g)
        out[f"{label}_name"] = group.name(int(g))
    return out


def map_table(f: GroupMap) -> Dict[str, List[int]]:
    return {name: list(value) for name, value in f.as_table().items()}


def _first(mask: np.ndarray) -> Optional[tuple]:
    """Index tuple of the first True entry of a boolean array"""
    hits = np.argwhere(mask)
    return tuple(int(v) for v in hits[0]) if len(hits) else None


def _nonzero(values: np.ndarray, moduli: np.ndarray) -> np.ndarray:
    """True where a residue vector (last axis) is nonzero modulo the target"""
    return (values % moduli != 0).any(axis=-1)


def generated_by_involutions(group: FiniteGroup) -> bool:
    return len(subgroup_closure(group, involutions(group))) == group.size


# ==================== IDENTITIES FOR A SINGLE SOLUTION ====================

def check_basic_identities(f: GroupMap) -> CheckResult:
    """f(x^-1) = -f(x) and f(x^2) = 2 f(x)"""
    G, F, M = f.group, f.values, f.target.moduli
    instance = instance_of(G, f.target)
    odd = _first(_nonzero(F[G.inverses] + F, M))
    if odd is not None:
        return _failed("identities.basic", instance, {"identity": "f(x^-1) = -f(x)", **_elements(G, x=odd[0]), "map": map_table(f)})
    square = _first(_nonzero(F[G.square_map] - 2 * F, M))
    if square is not None:
        return _failed("identities.basic", instance, {"identity": "f(x^2) = 2f(x)", **_elements(G, x=square[0]), "map": map_table(f)})
    return _passed("identities.basic", instance)


def _triple_failure(f: GroupMap, residual: Callable[[int], np.ndarray]) -> Optional[tuple]:
    """Scan x one slice at a time; residual(x) has shape (|G|, |G|, rank) over (y, z)"""
    M = f.target.moduli
    for x in range(f.group.size):
        hit = _first(_nonzero(residual(x), M))
        if hit is not None:
            return (x,) + hit
    return None


def check_switching(f: GroupMap) -> CheckResult:
    """
    f(xyz) = 2f(x) - f(x z^-1 y^-1), f(xzy) = 2f(x) - f(x y^-1 z^-1) and
    f(xyz) - f(xzy) = f(x y^-1 z^-1) - f(x z^-1 y^-1), over every triple
    """
    G, F = f.group, f.values
    t, inv = G.table, G.inverses
    instance = instance_of(G, f.target)
    yz = t
    zy = t.T
    yz_inv = t[inv[:, None], inv[None, :]].T  # (y, z) -> z^-1 y^-1
    zy_inv = yz_inv.T  # (y, z) -> y^-1 z^-1

    identities = {
        "f(xyz) = 2f(x) - f(xz^-1y^-1)": lambda x: F[t[x][yz]] + F[t[x][yz_inv]] - 2 * F[x],
        "f(xzy) = 2f(x) - f(xy^-1z^-1)": lambda x: F[t[x][zy]] + F[t[x][zy_inv]] - 2 * F[x],
        "f(xyz) - f(xzy) = f(xy^-1z^-1) - f(xz^-1y^-1)": lambda x: (
            F[t[x][yz]] - F[t[x][zy]] - F[t[x][zy_inv]] + F[t[x][yz_inv]]
        ),
    }
    for identity, residual in identities.items():
        hit = _triple_failure(f, residual)
        if hit is not None:
            x, y, z = hit
            return _failed("identities.switching", instance,
                           {"identity": identity, **_elements(G, x=x, y=y, z=z), "map": map_table(f)})
    return _passed("identities.switching", instance, triples=G.size ** 3)


def check_two_involution_torsion(f: GroupMap, involution_set: InvolutionSet) -> CheckResult:
    """
    For a, b in I: 2f(a) = 0 and 2f(ab) = 0; if t^2 = ab then f(ab) = 2f(t),
    4f(t) = 0, and 2f(t) = 0 whenever f(ab) = 0.
    """
    G, H = f.group, f.target
    instance = instance_of(G, H)
    zero = H.zero()
    members = tuple(involution_set)
    for i, a in enumerate(members):
        for b in members[i:]:
            ab = G.multiply(a, b)
            pair = _elements(G, a=a, b=b)
            if H.scale(2, f.value(a)) != zero:
                return _failed("identities.two_involution_torsion", instance, {"identity": "2f(a) = 0", **pair, "map": map_table(f)})
            if H.scale(2, f.value(ab)) != zero:
                return _failed("identities.two_involution_torsion", instance, {"identity": "2f(ab) = 0", **pair, "map": map_table(f)})
            root = find_square_root(G, ab)
            if root is None:
                continue
            with_root = {**pair, **_elements(G, t=root)}
            two_ft = H.scale(2, f.value(root))
            if f.value(ab) != two_ft:
                return _failed("identities.two_involution_torsion", instance, {"identity": "f(ab) = 2f(t)", **with_root, "map": map_table(f)})
            if H.scale(4, f.value(root)) != zero:
                return _failed("identities.two_involution_torsion", instance, {"identity": "4f(t) = 0", **with_root, "map": map_table(f)})
            if f.value(ab) == zero and two_ft != zero:
                return _failed("identities.two_involution_torsion", instance, {"identity": "f(ab) = 0 implies 2f(t) = 0", **with_root, "map": map_table(f)})
    return _passed("identities.two_involution_torsion", instance)


def check_word_torsion(f: GroupMap, involution_set: InvolutionSet) -> CheckResult:
    """2f(g) = 0 on the subgroup generated by I"""
    G, M = f.group, f.target.moduli
    instance = instance_of(G, f.target)
    span = np.array(sorted(subgroup_closure(G, involution_set)), dtype=np.int64)
    hit = _first(_nonzero(2 * f.values[span], M))
    if hit is not None:
        return _failed("identities.word_torsion", instance,
                       {"identity": "2f(g) = 0", **_elements(G, g=span[hit[0]]), "map": map_table(f)})
    return _passed("identities.word_torsion", instance, span=len(span))


def check_reordering(f: GroupMap) -> CheckResult:
    """f(xyz) = f(xzy); needs G generated by involutions"""
    G, F = f.group, f.values
    instance = instance_of(G, f.target)
    if not generated_by_involutions(G):
        return _skipped("identities.reordering", instance, "G is not generated by involutions")
    t = G.table
    hit = _triple_failure(f, lambda x: F[t[x][t]] - F[t[x][t.T]])
    if hit is not None:
        x, y, z = hit
        return _failed("identities.reordering", instance,
                       {"identity": "f(xyz) = f(xzy)", **_elements(G, x=x, y=y, z=z), "map": map_table(f)})
    return _passed("identities.reordering", instance)


def check_absorption(f: GroupMap) -> CheckResult:
    """f(Z t^2) = -f(Z) for all Z, t; needs G generated by involutions"""
    G, F = f.group, f.values
    instance = instance_of(G, f.target)
    if not generated_by_involutions(G):
        return _skipped("identities.absorption", instance, "G is not generated by involutions")
    shifted = G.table[:, G.square_map]  # (Z, t) -> Z t^2
    hit = _first(_nonzero(F[shifted] + F[:, None, :], f.target.moduli))
    if hit is not None:
        return _failed("identities.absorption", instance,
                       {"identity": "f(Zt^2) = -f(Z)", **_elements(G, Z=hit[0], t=hit[1]), "map": map_table(f)})
    return _passed("identities.absorption", instance)


# ==================== SOLUTION SPACES UNDER SR2 ====================

def check_main_theorem(group: FiniteGroup, target: AbelianTarget, involution_set: InvolutionSet,
                       max_enum: int = DEFAULT_MAX_ENUM) -> CheckResult:
    """Under SR2: S1 = S12 = Hom, and every member of S1 is additive and solves J2"""
    instance = instance_of(group, target)
    report = check_sr2(group, involution_set)
    if not report.verdict:
        return _skipped("main.theorem", instance, "SR2 fails")

    s1 = solve(group, target, EquationKind.J1)
    s12 = solve(group, target, EquationKind.J12)
    homs = hom_space(group, target, max_enum)
    for label, space in (("S1", s1), ("S12", s12)):
        comparison = spaces_equal(space, homs, max_enum)
        if not comparison.equal:
            counterexample = {
                "identity": f"{label} = Hom",
                "cardinalities": [comparison.left_cardinality, comparison.right_cardinality],
            }
            if comparison.certificate is not None:
                counterexample["map"] = map_table(comparison.certificate)
                counterexample["in"] = label if comparison.certificate_side == "left" else "Hom"
            return _failed("main.theorem", instance, counterexample)

    for f in s1.members(max_enum):
        if not is_homomorphism(f):
            return _failed("main.theorem", instance, {"identity": "f is additive", "pair": find_additivity_failure(f), "map": map_table(f)})
        if not is_solution(f, EquationKind.J2):
            return _failed("main.theorem", instance, {"identity": "f solves J2", "pair": find_violation(f.group, f.target, f.values, EquationKind.J2), "map": map_table(f)})
    return _passed("main.theorem", instance, cardinality=s1.cardinality)


def parity_maps(group: FiniteGroup, target: AbelianTarget, involution_set: InvolutionSet) -> Optional[List[GroupMap]]:
    """
    The maps g -> (word length of g mod 2) * u, u in H[2], with word length over I.
    None when the Cayley graph of I is not bipartite (the parity is ill-defined).
    """
    letters = np.array(tuple(involution_set), dtype=np.int64)
    lengths = word_lengths(group, letters).lengths
    if (lengths < 0).any():
        return None
    steps = lengths[group.table[:, letters]] - lengths[:, None]
    if (steps % 2 == 0).any():
        return None
    parity = (lengths % 2).astype(np.int64)
    return [
        GroupMap(group, target, parity[:, None] * np.array(u, dtype=np.int64)[None, :])
        for u in target.two_torsion()
    ]


def find_walk_violation(f: GroupMap, letters: Sequence[Element]) -> Optional[Tuple[int, int]]:
    """First (g, i) with f(g i) != f(g) + f(i); f is then not the sum of its values along words over I"""
    letters = np.asarray(letters, dtype=np.int64)
    F = f.values
    steps = F[f.group.table[:, letters]] - F[:, None, :] - F[letters][None, :, :]
    hit = _first(_nonzero(steps, f.target.moduli))
    return None if hit is None else (hit[0], int(letters[hit[1]]))


def check_parity_form(group: FiniteGroup, target: AbelianTarget, involution_set: InvolutionSet,
                      max_enum: int = DEFAULT_MAX_ENUM) -> CheckResult:
    """
    Under SR2 every f in S1 takes one value u in H[2] on I, is additive along
    every word over I, and f(g) is (word-length parity of g) * u. When the
    Cayley graph of I is not bipartite the only such map is zero.
    """
    instance = instance_of(group, target)
    report = check_sr2(group, involution_set)
    if not report.verdict:
        return _skipped("main.parity_form", instance, "SR2 fails")
    H = target
    members = tuple(involution_set)
    tree = word_lengths(group, members)

    solutions = list(solve(group, target, EquationKind.J1).members(max_enum))
    for f in solutions:
        u = f.value(members[0])
        if not H.is_two_torsion(u):
            return _failed("main.parity_form", instance, {"identity": "u in H[2]", "u": list(u), "map": map_table(f)})
        for i in members:
            if f.value(i) != u:
                return _failed("main.parity_form", instance, {"identity": "f(i) = u on I", **_elements(group, i=i), "u": list(u), "map": map_table(f)})
        walk = find_walk_violation(f, members)
        if walk is not None:
            return _failed("main.parity_form", instance,
                           {"identity": "f(gi) = f(g) + f(i)", **_elements(group, g=walk[0], i=walk[1]), "map": map_table(f)})
        for g in range(group.size):
            expected = H.scale(int(tree.lengths[g]) % 2, u)
            if f.value(g) != expected:
                return _failed("main.parity_form", instance, {"identity": "f(g) = parity(g) u", **_elements(group, g=g), "u": list(u), "map": map_table(f)})

    expected_maps = parity_maps(group, target, involution_set)
    bipartite = expected_maps is not None
    if not bipartite:
        expected_maps = [GroupMap.zero(group, target)]
    expected_keys = {f.key for f in expected_maps}
    actual_keys = {f.key for f in solutions}
    if expected_keys != actual_keys:
        missing = next((f for f in expected_maps if f.key not in actual_keys), None)
        extra = next((f for f in solutions if f.key not in expected_keys), None)
        witness = missing if missing is not None else extra
        return _failed("main.parity_form", instance, {
            "identity": "S1 = parity maps",
            "cardinalities": [len(actual_keys), len(expected_keys)],
            "map": map_table(witness),
            "in": "parity maps" if missing is not None else "S1",
        })
    return _passed("main.parity_form", instance, cardinality=len(solutions), bipartite=bipartite)


def check_increment_constancy(group: FiniteGroup, target: AbelianTarget, involution_set: InvolutionSet,
                              max_enum: int = DEFAULT_MAX_ENUM) -> CheckResult:
    """Under SR2: f(xj) - f(x) = f(j) for j in I, and f(ab) = 0 for a, b in I"""
    instance = instance_of(group, target)
    if not check_sr2(group, involution_set).verdict:
        return _skipped("sr2.increment_constancy", instance, "SR2 fails")
    letters = np.array(tuple(involution_set), dtype=np.int64)
    M = target.moduli
    products = group.table[letters[:, None], letters[None, :]]
    for f in solve(group, target, EquationKind.J1).members(max_enum):
        walk = find_walk_violation(f, letters)
        if walk is not None:
            return _failed("sr2.increment_constancy", instance,
                           {"identity": "f(xj) - f(x) = f(j)", **_elements(group, x=walk[0], j=walk[1]), "map": map_table(f)})
        hit = _first(_nonzero(f.values[products], M))
        if hit is not None:
            return _failed("sr2.increment_constancy", instance,
                           {"identity": "f(ab) = 0", **_elements(group, a=letters[hit[0]], b=letters[hit[1]]), "map": map_table(f)})
    return _passed("sr2.increment_constancy", instance)


def check_factorisation(group: FiniteGroup, target: AbelianTarget, involution_set: InvolutionSet,
                        max_enum: int = DEFAULT_MAX_ENUM) -> CheckResult:
    """Under SR2 every f in S1 is constant on the cosets of [G, G]"""
    instance = instance_of(group, target)
    if not check_sr2(group, involution_set).verdict:
        return _skipped("main.factorisation", instance, "SR2 fails")
    derived = np.array(sorted(commutator_subgroup(group)), dtype=np.int64)
    M = target.moduli
    for f in solve(group, target, EquationKind.J1).members(max_enum):
        F = f.values
        hit = _first(_nonzero(F[group.table[:, derived]] - F[:, None, :], M))
        if hit is not None:
            return _failed("main.factorisation", instance,
                           {"identity": "f(gc) = f(g) for c in [G,G]", **_elements(group, g=hit[0], c=derived[hit[1]]), "map": map_table(f)})
    return _passed("main.factorisation", instance, derived_order=len(derived))


# ==================== COUNTEREXAMPLE ====================

def construct_counterexample(k: int, target: AbelianTarget, u: Sequence[int], c: Sequence[int]) -> GroupMap:
    """
    The map on D_2k sending even rotations to 0, odd rotations to u and every
    reflection to c. It solves J1 for any 2-torsion u, c and is additive only
    when u = 0.
    """
    if not isinstance(k, int) or k < 1:
        raise InvalidInputError(f"k must be a positive integer, got {k}")
    u, c = target.element(u), target.element(c)
    for label, value in (("u", u), ("c", c)):
        if not target.is_two_torsion(value):
            raise InvalidInputError(f"{label} = {value} is not 2-torsion in {target.spec}")
    m = 2 * k
    group = build_dihedral(m)

    def value(g: Element) -> AbElement:
        if g >= m:
            return c
        return u if g % 2 else target.zero()

    return GroupMap.from_function(group, target, value)


def check_dihedral_dichotomy(m_range: Iterable[int], target: AbelianTarget,
                             max_enum: int = DEFAULT_MAX_ENUM) -> List[CheckResult]:
    """
    Odd m: SR2 holds for the reflections and S1 = Hom. Even m: SR2 fails at a
    named pair and, when H[2] is nontrivial, the counterexample map lies in
    S1 but not in Hom; with H[2] = 0 the two spaces still agree.
    """
    results = []
    for m in m_range:
        if not 1 <= m <= MAX_DICHOTOMY_ORDER:
            raise InvalidInputError(f"dichotomy orders must lie in 1..{MAX_DICHOTOMY_ORDER}, got {m}")
        group = build_dihedral(m)
        reflections = default_involutions(group)
        instance = instance_of(group, target, m=m)
        report = check_sr2(group, reflections)
        if m % 2:
            results.append(_odd_dihedral(group, target, reflections, report, instance, max_enum))
        else:
            results.append(_even_dihedral(group, target, report, instance, max_enum))
    return results


def _odd_dihedral(group, target, reflections, report, instance, max_enum) -> CheckResult:
    if not report.verdict:
        failure = report.first_failure
        return _failed("dihedral.dichotomy", instance, {
            "identity": "SR2 holds for odd m",
            **(_elements(group, a=failure.a, b=failure.b) if failure else {"generates": report.generates}),
        })
    m = group.params[0]
    for k in range(m):
        t = dihedral_odd_witness(m, k)
        if group.multiply(t, t) != k:
            return _failed("dihedral.dichotomy", instance, {"identity": "t^2 = r^k", "k": k, **_elements(group, t=t)})
    main = check_main_theorem(group, target, reflections, max_enum)
    if not main.passed:
        return _failed("dihedral.dichotomy", instance, {"identity": "S1 = Hom for odd m", **(main.counterexample or {})})
    return _passed("dihedral.dichotomy", instance, verdict=True, cardinality=main.details.get("cardinality"))


def _even_dihedral(group, target, report, instance, max_enum) -> CheckResult:
    failure = report.first_failure
    if report.verdict or failure is None:
        return _failed("dihedral.dichotomy", instance, {"identity": "SR2 fails for even m", "verdict": report.verdict})
    failing_pair = _elements(group, a=failure.a, b=failure.b, product=failure.product)

    s1 = solve(group, target, EquationKind.J1)
    homs = hom_space(group, target, max_enum)
    comparison = spaces_equal(s1, homs, max_enum)
    cardinalities = [s1.cardinality, len(homs)]
    nonzero_torsion = [u for u in target.two_torsion() if any(u)]

    if not nonzero_torsion:
        if not comparison.equal:
            return _failed("dihedral.dichotomy", instance, {
                "identity": "S1 = Hom when H[2] = 0", "cardinalities": cardinalities,
                "map": map_table(comparison.certificate) if comparison.certificate is not None else None,
            })
        return _passed("dihedral.dichotomy", instance, verdict=False, failing_pair=failing_pair,
                       cardinalities=cardinalities)

    certificate = construct_counterexample(group.params[0] // 2, target, nonzero_torsion[0], target.zero())
    problems = []
    if comparison.equal or s1.cardinality <= len(homs):
        problems.append("|S1| > |Hom|")
    if not s1.contains(certificate):
        problems.append("counterexample solves J1")
    if is_homomorphism(certificate):
        problems.append("counterexample is not additive")
    if problems:
        return _failed("dihedral.dichotomy", instance, {
            "identity": "; ".join(problems), "cardinalities": cardinalities, "map": map_table(certificate),
        })
    return _passed("dihedral.dichotomy", instance, verdict=False, failing_pair=failing_pair,
                   cardinalities=cardinalities, certificate=map_table(certificate))


# ==================== PER-INSTANCE SUITE ====================

def _first_failing(results: Iterable[CheckResult], check_id: str, instance: Dict[str, Any], checked: int) -> CheckResult:
    for result in results:
        if result.status == CheckStatus.FAIL:
            return result
        if result.status == CheckStatus.SKIP:
            return CheckResult(check_id, instance, CheckStatus.SKIP, details=result.details)
    return _passed(check_id, instance, solutions=checked)


def _map_check(check_id: str, maps: List[GroupMap], instance: Dict[str, Any],
               run: Callable[[GroupMap], CheckResult]) -> CheckResult:
    """Run a per-map identity over every map; report the first failure"""
    return _first_failing((run(f) for f in maps), check_id, instance, len(maps))


def check_witnesses(report: Sr2Report) -> CheckResult:
    """Every recorded witness squares to its pair product; failures are not squares at all"""
    G = report.group
    instance = instance_of(G, None, involutions=len(report.involutions))
    for pair in report.pair_results:
        if pair.witness is not None and G.multiply(pair.witness, pair.witness) != pair.product:
            return _failed("sr2.witnesses", instance, {"identity": "t^2 = ab", **_elements(G, a=pair.a, b=pair.b, t=pair.witness)})
        if pair.witness is None and (G.square_map == pair.product).any():
            return _failed("sr2.witnesses", instance, {"identity": "ab is not a square", **_elements(G, a=pair.a, b=pair.b)})
    return _passed("sr2.witnesses", instance, verdict=report.verdict, generates=report.generates,
                   pairs=len(report.pair_results), failures=len(report.failures))


def check_closed_form_witnesses(group: FiniteGroup, report: Sr2Report) -> Optional[CheckResult]:
    """Closed-form roots for symmetric and odd dihedral groups; None for other families"""
    instance = instance_of(group, None)
    if group.family == "symmetric":
        n = group.params[0]
        for pair in report.pair_results:
            t = sn_witness(n, pair.a, pair.b)
            if group.multiply(t, t) != pair.product:
                return _failed("sr2.closed_form", instance, {"identity": "t^2 = tau1 tau2", **_elements(group, a=pair.a, b=pair.b, t=t)})
        return _passed("sr2.closed_form", instance, pairs=len(report.pair_results))
    if group.family == "dihedral" and group.params[0] % 2:
        m = group.params[0]
        for pair in report.pair_results:
            k = pair.product % m  # reflections multiply to rotations
            t = dihedral_odd_witness(m, k)
            if pair.product >= m or group.multiply(t, t) != pair.product:
                return _failed("sr2.closed_form", instance, {"identity": "t^2 = r^k", **_elements(group, a=pair.a, b=pair.b, t=t)})
        return _passed("sr2.closed_form", instance, pairs=len(report.pair_results))
    return None


def _oracle_check(group: FiniteGroup, target: AbelianTarget, kind: EquationKind, max_enum: int) -> CheckResult:
    check_id = f"solver.oracle.{kind.value}"
    instance = instance_of(group, target)
    search = target.cardinality ** (group.size - 1)
    if search > max_enum:
        return _skipped(check_id, instance, f"search space {search} exceeds {max_enum}")
    space = solve(group, target, kind)
    oracle = brute_force_solutions(group, target, kind, max_enum)
    comparison = spaces_equal(space, oracle, max_enum)
    if not comparison.equal:
        counterexample = {"identity": "SNF solutions = brute force", "cardinalities": [space.cardinality, len(oracle)]}
        if comparison.certificate is not None:
            counterexample["map"] = map_table(comparison.certificate)
            counterexample["in"] = "SNF" if comparison.certificate_side == "left" else "brute force"
        return _failed(check_id, instance, counterexample)
    return _passed(check_id, instance, cardinality=space.cardinality)


def run_instance_checks(group: FiniteGroup, target: AbelianTarget,
                        involution_set: Optional[InvolutionSet] = None,
                        max_enum: int = DEFAULT_MAX_ENUM) -> List[CheckResult]:
    """Every check for one (G, H) pair, in a fixed order"""
    involution_set = involution_set if involution_set is not None else default_involutions(group)
    instance = instance_of(group, target)
    results: List[CheckResult] = []
    logger.info("checking %s -> %s", group.spec, target.spec)

    for kind in EquationKind:
        results.append(_oracle_check(group, target, kind, max_enum))

    s1 = solve(group, target, EquationKind.J1)
    s2 = solve(group, target, EquationKind.J2)
    s12 = solve(group, target, EquationKind.J12)

    ab = abelianization(group)
    expected_homs = hom_count_from_factors(ab.factors, target)
    try:
        homs = hom_space(group, target, max_enum)
    except ConsistencyError as exc:
        results.append(_failed("hom.methods", instance, {"identity": "generator propagation = abelianization pull-back", "error": str(exc)}))
        return results
    if len(homs) != expected_homs:
        results.append(_failed("hom.methods", instance, {"identity": "|Hom| = prod gcd(m_i, d_j)", "cardinalities": [len(homs), expected_homs]}))
    else:
        results.append(_passed("hom.methods", instance, cardinality=len(homs), abelianization=list(ab.factors)))

    outside = next(((label, f) for f in homs for label, space in (("S1", s1), ("S2", s2)) if not space.contains(f)), None)
    if outside is not None:
        results.append(_failed("solver.hom_inclusion", instance, {"identity": f"Hom in {outside[0]}", "map": map_table(outside[1])}))
    else:
        results.append(_passed("solver.hom_inclusion", instance, homs=len(homs)))

    if max(s1.cardinality, s2.cardinality) > max_enum:
        results.append(_skipped("solver.intersection", instance, "solution spaces too large to enumerate"))
        members = None
    else:
        members = list(s1.members(max_enum))
        both = [f for f in members if s2.contains(f)]
        comparison = spaces_equal(s12, both, max_enum)
        if comparison.equal:
            results.append(_passed("solver.intersection", instance, cardinality=len(both)))
        else:
            results.append(_failed("solver.intersection", instance, {
                "identity": "S12 = S1 n S2", "cardinalities": [s12.cardinality, len(both)],
                "map": map_table(comparison.certificate) if comparison.certificate is not None else None,
            }))

    if members is None:
        for check_id in ("solver.shift", "identities.basic", "identities.switching",
                         "identities.two_involution_torsion", "identities.word_torsion",
                         "identities.reordering", "identities.absorption"):
            results.append(_skipped(check_id, instance, "solution space too large to enumerate"))
    else:
        results.append(_check_shift(group, target, members, instance))
        results.append(_map_check("identities.basic", members, instance, check_basic_identities))
        results.append(_map_check("identities.switching", members, instance, check_switching))
        results.append(_map_check("identities.two_involution_torsion", members, instance,
                                  lambda f: check_two_involution_torsion(f, involution_set)))
        results.append(_map_check("identities.word_torsion", members, instance,
                                  lambda f: check_word_torsion(f, involution_set)))
        results.append(_map_check("identities.reordering", members, instance, check_reordering))
        results.append(_map_check("identities.absorption", members, instance, check_absorption))

    report = check_sr2(group, involution_set)
    results.append(check_witnesses(report))
    closed_form = check_closed_form_witnesses(group, report)
    if closed_form is not None:
        results.append(closed_form)

    results.append(check_main_theorem(group, target, involution_set, max_enum))
    if report.verdict:
        if s1.cardinality == expected_homs:
            results.append(_passed("main.hom_count", instance, cardinality=expected_homs))
        else:
            results.append(_failed("main.hom_count", instance, {"identity": "|S1| = prod gcd(m_i, d_j)", "cardinalities": [s1.cardinality, expected_homs]}))
    else:
        results.append(_skipped("main.hom_count", instance, "SR2 fails"))
    results.append(check_parity_form(group, target, involution_set, max_enum))
    results.append(check_increment_constancy(group, target, involution_set, max_enum))
    results.append(check_factorisation(group, target, involution_set, max_enum))
    return results


def _check_shift(group: FiniteGroup, target: AbelianTarget, members: List[GroupMap], instance: Dict[str, Any]) -> CheckResult:
    """f + c solves the un-normalized J1 for every f in S1 and every constant c"""
    constants = target.elements_array()
    for f in members:
        for c in constants:
            shifted = (f.values + c[None, :]) % target.moduli
            pair = find_violation(group, target, shifted, EquationKind.J1)
            if pair is not None:
                return _failed("solver.shift", instance, {
                    "identity": "f + c solves J1", "c": c.tolist(), **_elements(group, x=pair[0], y=pair[1]), "map": map_table(f),
                })
    return _passed("solver.shift", instance, shifts=len(members) * len(constants))
