"""
Run the orbit/isoclass sweep, the structural audit and the word-equation audit,
then print a summary with a split-shape census.
"""

import sys
import time
from collections import Counter
from pathlib import Path
sys.path.insert(0, str(Path(__file__).parent.parent))

from msa.audits import audit_corpus
from msa.harness import verify_theorem
from msa.shapes import TRIVALENT, audit_word_equations, split_shape
from msa.words import BinaryWord
from utils.config import load_run_config

config = load_run_config()
max_n = int(sys.argv[1]) if len(sys.argv) > 1 else config["run"]["max_n"]
audit_len = int(sys.argv[2]) if len(sys.argv) > 2 else config["audit"]["max_len"]
words_len = config["words"]["max_len"]
workers = config["run"]["workers"]

print("=" * 70)
print("Maximal Subalgebra Sweep")
print("=" * 70)

# Orbits vs isoclasses
print(f"\nVerifying every word with up to {max_n} vertices...")
started = time.perf_counter()
reports = verify_theorem(max_n, workers=workers)
sweep_seconds = time.perf_counter() - started
failed = [r for r in reports if not r.passed]
noted = [r for r in reports if r.notes]
print(f"[OK] {len(reports)} reports in {sweep_seconds:.1f}s\n")

# Structural audit
print(f"Auditing every representative on words of length <= {audit_len}...")
started = time.perf_counter()
audit = audit_corpus(audit_len, workers=workers)
audit_seconds = time.perf_counter() - started
print(f"[OK] {audit.representatives} representatives in {audit_seconds:.1f}s\n")

# Word equation
print(f"Solving w3 w2* = w2 w3 up to total length {words_len}...")
equations = audit_word_equations(words_len)
print(f"[OK] {len(equations.solutions)} solutions\n")

# Split shapes over the sweep
shapes = Counter()
divergent = 0
for report in reports:
    word = BinaryWord.from_string(report.word)
    for position in word.positions():
        shape = split_shape(word, position)
        shapes[shape.kind if shape.kind != TRIVALENT else f"{shape.kind} {shape.variant}"] += 1
        divergent += shape.diverges

print("-" * 70)
print("Results")
print("-" * 70)

print(f"\n**Orbits = isoclasses**: {len(reports) - len(failed)}/{len(reports)} words")
for report in failed:
    print(f"  - FAIL {report.word!r}: {'; '.join(report.notes)}")
print(f"**Words with disconnected notes**: {len(noted)}")
for report in noted[:5]:
    print(f"  - {report.word!r}: {report.notes[0]}")

print(f"\n**Structural audit** ({audit.words} words): {'pass' if audit.passed else 'fail'}")
for name, count in audit.violations.items():
    print(f"  - {name}: {count}")

print(f"\n**Word equation**: odd len(w3) {len(equations.odd_length)}, "
      f"asymmetric w3 {len(equations.asymmetric)}, ('+-', '+-') found {equations.known_found}")

total_shapes = sum(shapes.values())
print(f"\n**Split shapes** ({total_shapes} splits):")
for kind, count in sorted(shapes.items()):
    print(f"  - {kind}: {count} ({count / total_shapes * 100:.1f}%)")
print(f"  - closed-form lengths diverging from measured: {divergent}")

print("\n" + "=" * 70)
print("Sweep Complete!")
print("=" * 70)

if failed or not audit.passed or not equations.passed:
    sys.exit(1)
