from gentzen.templates import (
    jump_template, base_proof, lemma_template, digest, template_digests,
)
from gentzen.numerals import numeral_succ_proof, numeral_succ_into
from gentzen.generator import (
    GenerationError, gen_ti, gen_feps_total, ti_proof, ti_into, level_template,
)
from gentzen.measure import (
    SizeRow, SizeReport, size_report, naive_iterate_length, fit_degree, checked,
    GENERATORS, GENERATOR_THEORY,
)
