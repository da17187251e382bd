from kernel.schemas import (
    ParamKind, Schema, Theory, THEORIES, get_theory, schema_table,
)
from kernel.proof import (
    ProofFormatError, AxiomInstance, ModusPonens, Generalization, ProofLine, HilbertProof,
    Accepted, Rejected, check, proof_length, justification_length,
    render_proof, render_justification, parse_proof, parse_justification,
    subst_proof, concat,
)
from kernel.tactics import (
    Derivation, TacticError, implication_chain, forall_instantiate,
    refl, sym, trans, trans_chain, congruence, rewrite, identity, weaken, imp_apply, contract,
    and_intro, and_left, and_right, or_cases, ex_elim, sym_imp, explode,
    dne, dni, contrapose, classical, excluded_middle,
    conjunction, assume, conjoin, use_lemma, close,
)
from kernel.enumerator import (
    EnumerationCapError, NoRefutationUpTo, Refutation, enumerate_consistency,
)
