"""The .bcat text format, the printer, DOT export and the CLI.

Run with:  python demos/05_dsl_and_cli.py
"""

from basecat import dsl, dot
from basecat.cli import main
from basecat.corpus import fixtures_dir

source = """
# Declarations refer to earlier ones by name; identities stay implicit.
category Z2 {
  objects: *
  arrows: s: * -> *
  compose: s . s = id_*
}

action z2swap {
  group: Z2
  set: { 0, 1 }
  phi: s: 0 |-> 1, 1 |-> 0
}
"""

doc = dsl.parse(source, "demo.bcat")
printed = dsl.format_document(doc)
print(printed)
print("round trip:", dsl.parse(printed, "again.bcat") == doc)

env = dsl.elaborate(doc)
import basecat as bc

groupoid = bc.transformation_groupoid(env.actions["z2swap"])
print(dot.export_dot(groupoid))

# The same operations are scriptable through the CLI; exit codes are the
# contract (0 pass, 1 claim failed, 2 parse or usage error).
core = str(fixtures_dir() / "core.bcat")
print("CLI validate:", main(["--format", "machine", "validate", core]))
print("CLI check:", main(["--format", "machine", "check", "fibration", core, "graph(idTwo)"]))
print("CLI verify:", main(["--format", "machine", "verify", "prop4"]))
