#!/usr/bin/env python3
"""Contract checks for the btwlab executable: schema validity of every
response, exit codes, byte-identical reruns and golden outputs."""

import argparse
import json
import math
import os
import subprocess
import sys
import tempfile

import jsonschema


def run(btwlab, args, env=None):
    proc = subprocess.run([btwlab, *args], capture_output=True, text=True, env=env)
    return proc.returncode, proc.stdout, proc.stderr


def close(a, b, tol=1e-9):
    if isinstance(a, bool) or isinstance(b, bool):
        return a == b
    if isinstance(a, (int, float)) and isinstance(b, (int, float)):
        return math.isclose(a, b, rel_tol=tol, abs_tol=tol)
    if isinstance(a, dict) and isinstance(b, dict):
        return a.keys() == b.keys() and all(close(a[k], b[k], tol) for k in a)
    if isinstance(a, list) and isinstance(b, list):
        return len(a) == len(b) and all(close(x, y, tol) for x, y in zip(a, b))
    return a == b


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--btwlab", required=True)
    ap.add_argument("--schemas", required=True)
    ap.add_argument("--golden", required=True)
    ap.add_argument("--data", required=True)
    opts = ap.parse_args()

    def schema(name):
        with open(os.path.join(opts.schemas, f"{name}.schema.json")) as f:
            return json.load(f)

    def data(name):
        return os.path.join(opts.data, name)

    envelope = schema("envelope")
    failures = []

    def check(label, ok, why=""):
        print(f"{'ok  ' if ok else 'FAIL'} {label}{' : ' + why if why and not ok else ''}")
        if not ok:
            failures.append(label)

    # inputs themselves follow the published input schemas
    for name in ("five_point_A.json", "five_point_B.json"):
        with open(data(name)) as f:
            jsonschema.validate(json.load(f), schema("config"))
    with open(data("cover_three_arcs.json")) as f:
        jsonschema.validate(json.load(f), schema("cover_certificate"))

    cases = [
        # label, args, payload schema, expected exit code, expected status, golden file
        ("invariant", ["invariant", "--pair", data("pair_1_2.json")], "invariant", 0, "ok",
         "invariant_1_2.json"),
        ("classify", ["classify", "--pair", data("pair_separated.json")], "classify", 0, "ok",
         "classify_separated.json"),
        ("iso betweenness", ["iso", "--kind", "betweenness", "--a", data("five_point_A.json"), "--b",
                             data("five_point_B.json")], "iso", 0, "refuted", "iso_betweenness_five_point.json"),
        ("iso collinearity", ["iso", "--kind", "collinearity", "--a", data("five_point_A.json"), "--b",
                              data("five_point_B.json")], "iso", 0, "ok", "iso_collinearity_five_point.json"),
        ("iso node limit", ["--node-limit", "1", "iso", "--kind", "collinearity", "--a",
                            data("five_point_A.json"), "--b", data("five_point_A.json"), "--all"],
         "iso", 2, "inconclusive", None),
        ("cover", ["cover", "--pair", data("pair_1_2.json"), "--target", "3.2"], "cover", 0, "ok", None),
        ("verify", ["verify", "--pair", data("pair_1_2.json"), "--certificate",
                    data("cover_three_arcs.json")], "verify", 0, "refuted", "verify_three_arcs.json"),
        ("sample", ["sample", "--pair", data("pair_half.json"), "--n", "6", "--p", "1"], "sample", 0,
         "ok", "sample_6_1.json"),
        ("example five_points", ["example", "--name", "five_points"], "example", 0, "ok",
         "example_five_points.json"),
        ("example nested_triangle", ["example", "--name", "nested_triangle", "--y", "0"], "example", 0,
         "ok", "example_nested_triangle.json"),
        ("example forced_ratio", ["example", "--name", "forced_ratio", "--y", "0"], "example", 0, "ok",
         "example_forced_ratio.json"),
        ("example covering_number", ["example", "--name", "covering_number"], "example", 0, "ok",
         "example_covering_number.json"),
        ("example position_signatures", ["example", "--name", "position_signatures", "--pair",
                                         data("pair_separated.json")], "example", 0, "ok", None),
        ("schema error", ["invariant", "--pair", '{"center":[0,0],"rho":1}'], None, 1, "error", None),
        ("parse error", ["invariant", "--pair", '{"center":'], None, 1, "error", None),
        ("usage error", ["invariant", "--nope"], None, 1, "error", None),
        ("missing file", ["classify", "--pair", data("absent.json")], None, 1, "error", None),
    ]

    for label, args, payload_schema, code, status, golden in cases:
        rc, out, _ = run(opts.btwlab, args)
        check(f"{label}: exit {code}", rc == code, f"got {rc}")
        try:
            doc = json.loads(out)
        except json.JSONDecodeError as e:
            check(f"{label}: JSON output", False, str(e))
            continue
        try:
            jsonschema.validate(doc, envelope)
            if payload_schema:
                jsonschema.validate(doc["payload"], schema(payload_schema))
            check(f"{label}: schema", True)
        except jsonschema.ValidationError as e:
            check(f"{label}: schema", False, e.message)
        check(f"{label}: status {status}", doc.get("status") == status, doc.get("status"))

        rc2, out2, _ = run(opts.btwlab, args)
        check(f"{label}: rerun identical", rc2 == rc and out2 == out)
        if golden:
            with open(os.path.join(opts.golden, golden)) as f:
                expected = json.load(f)
            check(f"{label}: golden", close(doc, expected))

    # --output writes the same bytes as stdout
    with tempfile.TemporaryDirectory() as tmp:
        path = os.path.join(tmp, "out.json")
        args = ["example", "--name", "five_points"]
        _, stdout_text, _ = run(opts.btwlab, args)
        rc, out, _ = run(opts.btwlab, ["--output", path, *args])
        with open(path) as f:
            check("--output matches stdout", rc == 0 and out == "" and f.read() == stdout_text)

    # the seed variable is echoed but never changes results
    env = dict(os.environ, BETWEENNESS_LAB_SEED="12345")
    _, seeded, _ = run(opts.btwlab, ["invariant", "--pair", data("pair_1_2.json")], env)
    seeded_doc = json.loads(seeded)
    with open(os.path.join(opts.golden, "invariant_1_2.json")) as f:
        check("seed does not change payload", close(seeded_doc["payload"], json.load(f)["payload"]))
    check("seed echoed in diagnostics", any("12345" in d for d in seeded_doc["diagnostics"]))

    # figures are CSV with a fixed header
    rc, out, _ = run(opts.btwlab, ["figure", "--name", "fig4_triangles"])
    with open(os.path.join(opts.golden, "fig4_triangles.csv")) as f:
        golden_rows = [r.split(",") for r in f.read().splitlines()]
    rows = [r.split(",") for r in out.splitlines()]
    same = len(rows) == len(golden_rows) and all(
        a[:2] == b[:2] and a[4:] == b[4:] and close([float(x) for x in a[2:4]], [float(x) for x in b[2:4]])
        for a, b in zip(rows[1:], golden_rows[1:]))
    check("figure fig4_triangles golden", rc == 0 and rows[0] == golden_rows[0] and same)

    print(f"{len(failures)} failure(s)")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
