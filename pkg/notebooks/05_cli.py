"""
Command line
============

The ``priestley`` command reads a JSON document (poset, lattice or space)
and prints a JSON report. ``main`` can be called directly with an argv list.
"""

# %%
import io
import json
import tempfile

from priestley.cli import main

doc = {"lattice": {"elements": ["0", "a", "b", "1"], "order": [["0", "a"], ["0", "b"], ["a", "1"], ["b", "1"]]}}
with tempfile.NamedTemporaryFile("w", suffix=".json", delete=False) as f:
    json.dump(doc, f)
path = f.name

# %%
out = io.StringIO()
code = main(["check", path, "--suite", "dual"], out=out)
print("exit", code)
print(out.getvalue())

# %%
out = io.StringIO()
main(["emit", path, "--target", "dual", "--format", "dot"], out=out)
print(out.getvalue())

# %%
out = io.StringIO()
main(["fixtures", "--seed", "1"], out=out)
print(json.loads(out.getvalue())["status"])
