# Copyright 2026 The subdiff Authors
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Runs every subdiff subcommand and validates its output against schemas/."""

import json
import pathlib
import subprocess
import sys
import tempfile

import jsonschema
from referencing import Registry, Resource


def load_registry(schema_dir):
    schemas = {}
    for path in sorted(schema_dir.glob("*.schema.json")):
        schemas[path.name] = json.loads(path.read_text())
    registry = Registry().with_resources(
        (name, Resource.from_contents(body)) for name, body in schemas.items())
    return schemas, registry


class Harness:
    def __init__(self, cli, schema_dir, workdir):
        self.cli = cli
        self.workdir = workdir
        self.schemas, self.registry = load_registry(schema_dir)
        self.failures = []

    def validator(self, name):
        cls = jsonschema.validators.validator_for(self.schemas[name])
        return cls(self.schemas[name], registry=self.registry)

    def run(self, args, expect_code=0):
        proc = subprocess.run([self.cli, *args], cwd=self.workdir,
                              capture_output=True, text=True)
        if proc.returncode != expect_code:
            self.fail(f"{' '.join(args)}: exit {proc.returncode}, expected "
                      f"{expect_code}\n{proc.stderr}")
        return proc

    def fail(self, msg):
        self.failures.append(msg)
        print("FAIL", msg)

    def check(self, schema, doc, label):
        errors = list(self.validator(schema).iter_errors(doc))
        if errors:
            self.fail(f"{label}: {errors[0].message}")
        else:
            print("ok  ", label, "matches", schema)

    def check_stdout(self, schema, args):
        proc = self.run(args)
        try:
            doc = json.loads(proc.stdout)
        except json.JSONDecodeError as exc:
            self.fail(f"{args[0]}: stdout is not JSON ({exc})")
            return None
        self.check(schema, doc, args[0])
        return doc

    def check_jsonl(self, schema, filename):
        lines = (self.workdir / filename).read_text().splitlines()
        validator = self.validator(schema)
        bad = [i for i, line in enumerate(lines, 1)
               if line and list(validator.iter_errors(json.loads(line)))]
        if bad:
            self.fail(f"{filename}: line {bad[0]} violates {schema}")
        else:
            print("ok  ", filename, f"({len(lines)} lines) matches", schema)


def main():
    cli = pathlib.Path(sys.argv[1]).resolve()
    schema_dir = pathlib.Path(sys.argv[2]).resolve()
    with tempfile.TemporaryDirectory() as tmp:
        h = Harness(str(cli), schema_dir, pathlib.Path(tmp))
        (h.workdir / "k4.jsonl").write_text(
            '{"n":4,"edges":[[1,2],[1,3],[1,4],[2,3],[2,4],[3,4]]}\n')
        (h.workdir / "patterns.jsonl").write_text(
            '{"name":"p3","n":3,"edges":[[1,2],[2,3]],"marks":[1,3]}\n')
        h.check_jsonl("pattern_line.schema.json", "patterns.jsonl")

        doc = h.check_stdout("count.schema.json",
                             ["count", "--in", "k4.jsonl", "--patterns", "c3,c4"])
        if doc and doc["distributions"] != {"c3": {"4": 1.0}, "c4": {"3": 1.0}}:
            h.fail(f"count distributions: {doc['distributions']}")
        h.check_stdout("count.schema.json",
                       ["--pattern-file", "patterns.jsonl", "count", "--in",
                        "k4.jsonl", "--patterns", "p3"])

        h.check_stdout("gen_data.schema.json",
                       ["gen-data", "--pattern", "c4", "--n", "6", "--count", "20",
                        "--decoration", "tree", "--seed", "7", "--out", "train.jsonl"])
        h.check_jsonl("dataset_line.schema.json", "train.jsonl")
        h.check_stdout("sample.schema.json",
                       ["sample", "--train", "train.jsonl", "--out", "gen.jsonl",
                        "--num-samples", "10", "--steps", "100", "--seed", "3",
                        "--trajectory", "traj.jsonl"])
        h.check_jsonl("dataset_line.schema.json", "gen.jsonl")
        h.check_jsonl("trajectory_line.schema.json", "traj.jsonl")
        h.check_stdout("eval.schema.json",
                       ["eval", "--train", "train.jsonl", "--gen", "gen.jsonl",
                        "--patterns", "c3,c4,l5"])
        h.check_stdout("eval.schema.json",
                       ["eval", "--train", "train.jsonl", "--gen", "gen.jsonl",
                        "--novelty", "nodes-edges"])
        for suite, extra in [("eq5", ["--trials", "50"]), ("finitediff", []),
                             ("series", []), ("basis", ["--k", "2"]),
                             ("equivariance", ["--n", "4"])]:
            doc = h.check_stdout("verify.schema.json",
                                 ["verify", "--suite", suite, *extra])
            if doc and not doc["pass"]:
                h.fail(f"verify {suite} reported failure")

        # Error paths: non-zero exit and nothing on stdout.
        for args in (["count", "--in", "k4.jsonl", "--patterns", "c9"],
                     ["count", "--in", "k4.jsonl", "--patterns", ""],
                     ["gen-data", "--pattern", "c5", "--n", "8", "--count", "0",
                      "--out", "x.jsonl"],
                     ["sample", "--train", "train.jsonl", "--out", "s.jsonl",
                      "--num-samples", "2", "--steps", "50", "--mode", "series"]):
            proc = h.run(args, expect_code=2)
            if proc.stdout.strip():
                h.fail(f"{args[0]}: error run wrote to stdout")
            if "error" not in proc.stderr:
                h.fail(f"{args[0]}: missing error message")
        proc = h.run(["verify", "--suite", "basis", "--tolerance", "0"],
                     expect_code=1)
        if json.loads(proc.stdout)["pass"]:
            h.fail("verify with zero tolerance should fail")

    if h.failures:
        print(f"{len(h.failures)} failure(s)")
        return 1
    print("all outputs valid")
    return 0


if __name__ == "__main__":
    sys.exit(main())
