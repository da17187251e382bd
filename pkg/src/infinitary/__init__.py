from infinitary.formulas import (
    NNum, NVar, NApp, NTerm, Prime, Mem, NotMem, And, Or, ExN, AllN, Formula, Sequent,
    TermEvaluationError, num, mem, not_mem, negate_prime, subst, instance, dual,
    eval_term, feps_star_eq, feps_star_total, prime_holds, truth_in_K, is_sigma_n,
    is_sigma_n_sequent, k_of, sequent_false_in, truth_threshold, sequent_threshold,
    format_formula, format_sequent,
)
from infinitary.hierarchy import (
    Yes, No, Undecided, FastGrowing, Surrogate, Hierarchy, bounded_by,
)
from infinitary.terms import (
    ProofTerm, AxTruePrime, AxZeroN, AxNNegPair, AxFepsStar, RuleN, RuleAnd, RuleOr,
    RuleExists, RuleOmega, CutN, CutPrime, CutFepsStar, Accum, Inv, AXIOMS, TAGS,
    OK, Fail, subst_proof_term, omega_child, invert, unfold_inv, check_node, locally_correct,
)
from infinitary.reduction import (
    ReductionPreconditionError, DominanceCertificate, TraceStep, ReductionTrace,
    SequentTrue, LocalError, BudgetExhausted, SpotCheckReport,
    SAME_INPUT_DESCENT, INPUT_BELOW_BOUND, ACCUM_MESH,
    certificate_check, reduce_trace, micro_ordinals, surrogate_spot_check, trace_spot_check,
)
from infinitary.sexpr import TermFormatError, read_term, write_term, write_formula
from infinitary.fixtures import (
    Fixture, worked_chain, worked_chain_mutant, fixture_suite, feps_star_universal,
)
