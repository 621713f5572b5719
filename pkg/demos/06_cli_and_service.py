"""
The command line and the HTTP service
=====================================

Drives the full learn/synthesize/check cycle through the command line
interface, then asks the HTTP service for the same check.
"""

import json
import subprocess
import sys
import tempfile
import threading
import time
import urllib.request
from pathlib import Path

import uvicorn

from parcc import box_packing
from parcc.documents import save_demo
from parcc.service import create_app

workdir = Path(tempfile.mkdtemp(prefix="parcc_demo_"))
demo_dir = workdir / "demos"
demo_dir.mkdir()
for i, demo in enumerate(box_packing.demo_set(k=4, seed=2)):
    save_demo(demo, demo_dir / f"scene_{i}.json")


def cli(*args):
    proc = subprocess.run(
        [sys.executable, "-m", "parcc.cli", *args], capture_output=True, text=True
    )
    print(f"$ parcc {' '.join(args)}")
    if proc.stdout:
        print("\n".join("  " + line for line in proc.stdout.strip().splitlines()[:6]))
    return proc


# learn rules from the saved scenes, then synthesize a fresh scene from
# them and check it against the learned rule file
rules_path = workdir / "learned.parcc"
cli("infer", "--demos", str(demo_dir), "--seed", "3", "--out", str(rules_path))
learned = rules_path.read_text().splitlines()
print(f"  wrote {len(learned)} rules, first three:")
for line in learned[:3]:
    print(f"    {line}")

inventory_path = workdir / "inventory.json"
inventory_path.write_text(json.dumps({
    "schema_version": 1,
    "space": {"x_min": 0, "x_max": 16, "y_min": 0, "y_max": 16},
    "items": [{"class": name, "l": 1.0, "w": 1.0, "count": 2} for name in ("B", "R", "G")],
    "fixed_objects": [
        {"id": o.id, "class": o.cls, "l": o.l, "w": o.w, "x": o.x, "y": o.y}
        for o in box_packing.walls()
    ],
}, indent=2))
scene_path = workdir / "synthesized.json"
cli("place", "--spec", str(rules_path), "--inventory", str(inventory_path),
    "--seed", "4", "--out", str(scene_path))
proc = cli("check", "--spec", str(rules_path), "--demo", str(scene_path))
assert proc.returncode == 0

# the same check over HTTP; the service exposes the library behind
# /api/check, /api/infer and /api/place
server = uvicorn.Server(uvicorn.Config(create_app(), host="127.0.0.1", port=8731, log_level="error"))
thread = threading.Thread(target=server.run, daemon=True)
thread.start()
while not server.started:
    time.sleep(0.05)

body = json.dumps({
    "spec": rules_path.read_text(),
    "demo": json.loads(scene_path.read_text()),
}).encode()
request = urllib.request.Request(
    "http://127.0.0.1:8731/api/check", body, {"content-type": "application/json"}
)
with urllib.request.urlopen(request) as response:
    answer = json.load(response)
print(f"\nPOST /api/check -> satisfied={answer['satisfied']} "
      f"({answer['clauses_total']} clauses)")
server.should_exit = True
thread.join()
