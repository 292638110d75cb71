"""Character forms, integrality and the weight 3 assembly.

Run with ``python3 demos/03_characters_and_pipeline.py``.
"""

from galois_polylog import charconv, tensorcrit
from galois_polylog.cli import sample_points

print(charconv.verify_dilog_forms().summary())

for row in charconv.integrality_table("4.7", 2):
    print(f"l=2  {row.status:<13} {row.term}")

print(tensorcrit.verify_tensor_criterion().trace())
print(tensorcrit.verify_error_term().summary())
print(tensorcrit.pipeline_ladic().summary())

# without the cocycle rewrites the assembly does not close up
rep = tensorcrit.pipeline_ladic({})
print(rep.summary().splitlines()[0])

rep, vals = tensorcrit.pipeline_complex_report(sample_points(0, 5))
for v in vals:
    print(f"z={v.z:.6f}  residual={v.residual:.2e}")
