"""
Command-line run with SVG output
================================

Equivalent shell command:

    impregnate run --kplus 100 --output_dir out_k100 --dump-grid --svg
"""
# %%
from pathlib import Path

from impregnation.cli import main

out = Path("out_k100")
status = main(["run", "--kplus", "100", "--output_dir", str(out), "--dump-grid", "--svg"])
print("exit status", status)
print(sorted(p.name for p in out.iterdir()))
print((out / "summary.txt").read_text())
