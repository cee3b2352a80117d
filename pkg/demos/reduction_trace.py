"""Walk through the reduction for one instance and print what each stage produced."""

import json

from forallexist import BoxBody, InputStatement, decide
from forallexist.pipeline import dedupe_columns, to_standard_form

S = InputStatement([[2, 1], [0, 2]], BoxBody([0, 0], [3, 3]))
Wp = dedupe_columns(to_standard_form(S).W)
print("standard-form columns:", list(zip(*Wp)))

v = decide(S)
t = v.trace
print(f"cap L = {t['l1_cap']}, shift norm bound = {t['shift_norm_bound']}, facets = {t['facets']}")
for rec in t["bases"]:
    note = f"  ({rec['skipped']})" if "skipped" in rec else ""
    print(f"  basis {rec['basis']}: |det| = {rec['det']}, |C| = {rec['shift_set']}, "
          f"cells = {rec['cells']}{note}")
print("orthant subproblems:", t["subproblems"])
print("verdict:", json.dumps(v.to_json()))

# a smaller cap is much cheaper but only a heuristic: candidates get re-checked
cheap = decide(S, l1_cap=2)
print("with cap 2:", cheap.status, "rejected candidates:", cheap.trace["rejected_candidates"])
