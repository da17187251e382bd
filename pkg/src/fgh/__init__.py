from fgh.evaluator import (
    EvalBudget, EvalOutcome, Converged, DivergedSteps, DivergedValue, LeqYes, LeqNo,
    fgh_eval, fgh_leq, hierarchy_iterate, feps_eval, feps_inverse, feps_star,
    outcome_to_dict,
)
