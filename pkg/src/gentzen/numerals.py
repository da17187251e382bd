"""
Proofs of the numeral successor identities (num(m) + S(0)) = num(m + 1)

The recursion has one level per binary digit of m, each a fixed number of
lines, so the proof length is O(lg m . c) with c the size of one level
(measured for m <= 512 with c read off m = 511).
"""

from syntax import Term, Var, Add, Mul, Eq, ZERO_T, ONE_T, TWO_T, numeral
from kernel import Derivation, HilbertProof, refl, sym, trans, trans_chain, congruence

HOLE = Var('z', 0)


def _mul_one(d: Derivation, t: Term) -> int:
    """(t * S(0)) = t"""
    succ = d.axiom('PA_MUL_SUCC', s=t, t=ZERO_T)
    zero = d.axiom('PA_MUL_ZERO', t=t)
    drop = congruence(d, zero, HOLE, Add(HOLE, t))
    comm = d.axiom('PA_ADD_COMM', s=ZERO_T, t=t)
    unit = d.axiom('PA_ADD_ZERO', t=t)
    return trans_chain(d, [succ, drop, comm, unit])


def _double_step(d: Derivation, a: Term) -> int:
    """(((a * two) + S(0)) + S(0)) = ((a + S(0)) * two)"""
    a2 = Mul(a, TWO_T)
    assoc = d.axiom('PA_ADD_ASSOC', r=a2, s=ONE_T, t=ONE_T)

    comm = d.axiom('PA_MUL_COMM', s=Add(a, ONE_T), t=TWO_T)
    dist = d.axiom('PA_DISTRIB', r=TWO_T, s=a, t=ONE_T)
    swap = congruence(d, d.axiom('PA_MUL_COMM', s=TWO_T, t=a),
                      HOLE, Add(HOLE, Mul(TWO_T, ONE_T)))
    unit = congruence(d, _mul_one(d, TWO_T), HOLE, Add(a2, HOLE))
    expanded = trans_chain(d, [comm, dist, swap, unit])
    return trans(d, assoc, sym(d, expanded))


def _succ(d: Derivation, m: int) -> int:
    if m == 0:
        comm = d.axiom('PA_MUL_COMM', s=ZERO_T, t=TWO_T)
        zero = d.axiom('PA_MUL_ZERO', t=TWO_T)
        vanish = trans(d, comm, zero)
        lifted = congruence(d, vanish, HOLE, Add(HOLE, ONE_T))
        return sym(d, lifted)
    if m % 2 == 0:
        return refl(d, Add(numeral(m), ONE_T))
    j = (m - 1) // 2
    ih = _succ(d, j)
    doubled = congruence(d, ih, HOLE, Mul(HOLE, TWO_T))
    return trans(d, _double_step(d, numeral(j)), doubled)


def numeral_succ_into(d: Derivation, m: int) -> int:
    """Append a proof of (num(m) + S(0)) = num(m + 1); returns its line"""
    line = _succ(d, m)
    expected = Eq(Add(numeral(m), ONE_T), numeral(m + 1))
    if d.formula(line) != expected:
        raise AssertionError(f"numeral identity for {m} built the wrong equation")
    return line


def numeral_succ_proof(m: int) -> HilbertProof:
    """Accepted pa-r proof of (num(m) + S(0)) = num(m + 1)"""
    d = Derivation()
    numeral_succ_into(d, m)
    return d.to_proof()
