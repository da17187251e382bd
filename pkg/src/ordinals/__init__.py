from ordinals.notation import (
    Ordinal, OrdinalError, OrdinalParseError, Comparison,
    ZERO, ONE, OMEGA, EPSILON_ZERO,
    nat, compare, add, successor, predecessor, omega_power, omega_tower,
    fund_seq, mesh, parse_ordinal, format_ordinal,
)
from ordinals.descent import (
    DescentPath, Reached, NotOnPath, BudgetExhausted,
    step_down, strictly_below, reached_or_equal, tail_of,
)
