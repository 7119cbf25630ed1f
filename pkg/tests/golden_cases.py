"""CLI invocations frozen as golden reports (run from the repository root)."""

from __future__ import annotations

import contextlib
import io
import os

from ncminors.cli import run

CASES = {
    "minor_lambda_e12": ["minor", "--algebra", "data/lambda.alg", "--idempotent", "e1+e2"],
    "minor_lambda_sc_e12": ["minor", "--algebra", "data/lambda_sc.alg", "--idempotent", "e1+e2"],
    "trace_ideal_lambda_e3": ["trace-ideal", "--algebra", "data/lambda.alg", "--idempotent", "e3"],
    "recollement_lambda_e12": ["recollement", "--algebra", "data/lambda.alg", "--idempotent", "e1+e2"],
    "recollement_mat2_e11": ["recollement", "--algebra", "data/mat2.alg", "--idempotent", "E11"],
    "gldim_lambda": ["gldim", "--algebra", "data/lambda.alg"],
    "gldim_semisimple": ["gldim", "--algebra", "data/semisimple.alg"],
    "gldim_dual_capped": ["gldim", "--algebra", "data/dual_numbers.alg", "--cap", "4"],
    "ext_lambda": ["ext", "--algebra", "data/lambda.alg", "--module", "simple:e1",
                   "--module", "simple:e3", "--cap", "4"],
    "inj_dim_lambda": ["inj-dim", "--algebra", "data/lambda.alg"],
    "qhered_lambda": ["qhered", "--algebra", "data/lambda.alg"],
    "gldim_bound_lambda": ["gldim-bound", "--algebra", "data/lambda.alg"],
    "semiorth_lambda_e1": ["semiorth", "--algebra", "data/lambda.alg", "--idempotent", "e1"],
    "endo_dual_simple": ["endo", "--algebra", "data/dual_numbers.alg", "--module", "simple:e1"],
    "glue_dual_in_a2": ["glue", "--algebra", "data/dual_numbers.alg", "--over", "data/a2.alg",
                        "--inclusion", "1 1 0; 0 0 1"],
    "qhered_glue": ["qhered", "--algebra", "data/glue.alg"],
    "curve_hom_table_w222": ["curve-hom-table", "--curve", "data/w222.curve"],
    "curve_tilting_empty": ["curve-tilting", "--curve", "data/empty.curve"],
    "curve_tilting_w222_mu3": ["curve-tilting", "--curve", "data/w222_mu3.curve"],
    "curve_local_order_121": ["curve-local-order", "--composition", "1,2,1"],
    "curve_local_order_w3": ["curve-local-order", "--curve", "data/w3.curve"],
    "canonical_from_curve": ["canonical", "--curve", "data/w222_mu3.curve",
                             "--algebra", "data/canonical_mu3.alg"],
    "canonical_weights": ["canonical", "--weights", "2,3,4", "--lambdas", "2"],
    "negative_lambda_tampered": ["recollement", "--algebra", "data/negative/lambda_tampered.alg",
                                 "--idempotent", "e1"],
    "negative_canonical_tampered": ["canonical", "--curve", "data/w222_mu3.curve", "--algebra",
                                    "data/negative/canonical_mu3_tampered.alg"],
    "input_unknown_vertex": ["gldim", "--algebra", "data/negative/unknown_vertex.alg"],
    "input_unknown_idempotent": ["minor", "--algebra", "data/lambda.alg", "--idempotent", "e7"],
    "input_missing_file": ["gldim", "--algebra", "data/no_such_file.alg"],
}

EXIT = {name: 0 for name in CASES}
EXIT.update({"negative_lambda_tampered": 1, "negative_canonical_tampered": 1,
             "input_unknown_vertex": 2, "input_unknown_idempotent": 2, "input_missing_file": 2})


def capture(argv, root) -> str:
    """Exit code, stdout and stderr of one in-process run, as a single text."""
    out, err = io.StringIO(), io.StringIO()
    old = os.getcwd()
    os.chdir(root)
    try:
        with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
            code = run(argv)
    finally:
        os.chdir(old)
    return f"exit = {code}\n--- stdout\n{out.getvalue()}--- stderr\n{err.getvalue()}"
