"""Run the CLI and validate every JSON artifact it produces against docs/schemas."""
import json
import os
import subprocess
import sys
from pathlib import Path

import jsonschema


def main() -> int:
    cli, schema_dir, work = sys.argv[1], Path(sys.argv[2]), Path(sys.argv[3])
    work.mkdir(parents=True, exist_ok=True)
    schemas = {p.name.split(".")[0]: json.loads(p.read_text()) for p in schema_dir.glob("*.schema.json")}
    for s in schemas.values():
        jsonschema.Draft202012Validator.check_schema(s)
    failures = 0

    def check(label, schema, doc):
        nonlocal failures
        errors = list(jsonschema.Draft202012Validator(schemas[schema]).iter_errors(doc))
        print(("ok   " if not errors else "FAIL ") + label)
        for e in errors:
            print("     ", e.message)
        failures += bool(errors)

    def run(args, expect=0, env=None):
        full_env = dict(os.environ, **(env or {}))
        r = subprocess.run([cli, *args], capture_output=True, text=True, env=full_env)
        if r.returncode != expect:
            raise SystemExit(f"{args}: exit {r.returncode}, expected {expect}\n{r.stderr}")
        return r.stdout

    coeffs = work / "coeffs.json"
    coeffs.write_text(json.dumps({"nu": 1.0, "coeffs": [
        {"m": 0, "n": 0, "re": 1.0, "im": 0.0},
        {"m": 2, "n": 1, "re": 0.5, "im": -0.25}]}))
    check("coeff file (input)", "coeff_file", json.loads(coeffs.read_text()))
    canonical = work / "canonical.json"
    run(["transform", "dual", "--method", "coeff", "--coeffs", str(coeffs), "--write-coeffs", str(canonical)])
    check("coeff file (written)", "coeff_file", json.loads(canonical.read_text()))

    check("hermite eval", "value_output", json.loads(run(["hermite", "eval", "--m", "3", "--n", "1", "--z-re", "0.4"])))
    check("hermite zeros", "zeros_output", json.loads(run(["hermite", "zeros", "--m", "4", "--n", "2"])))
    check("hermite nullset", "nullset_output", json.loads(run(["hermite", "nullset", "--z-re", "1"])))
    for action in ["mehler", "mehler-series", "frft", "bergman", "gram"]:
        check(f"kernel {action}", "value_output",
              json.loads(run(["kernel", action, "--u-re", "0.3", "--v-im", "0.2", "--z-re", "0.1", "--w-im", "0.4"])))
    check("transform frft", "transform_output",
          json.loads(run(["transform", "frft", "--coeffs", str(coeffs), "--u-re", "0.5", "--x", "0,1,3", "--y", "0,1,3"])))
    check("transform dual", "transform_output",
          json.loads(run(["transform", "dual", "--coeffs", str(coeffs), "--w-re", "1", "--x", "0,0.5,3", "--y", "0.2,0,1"])))
    check("transform hankel", "transform_output",
          json.loads(run(["transform", "hankel", "--coeffs", str(coeffs), "--u-re", "0.4", "--v-re", "0.3",
                          "--k", "1", "--x", "1,1,4"])))

    paths = json.loads(run(["spectrum", "--max-m", "20", "--max-n", "20", "--w-re", "1", "--out", str(work / "spectrum")]))
    check("spectrum stdout", "spectrum_paths", paths)
    check("spectrum summary", "spectrum_summary", json.loads(Path(paths["summary_json"]).read_text()))

    config = {"quadrature": {"n_radial": 48, "n_angular": 48, "quadrant_n": 48},
              "tolerances": {"AC10": 1e-10}, "nu": [1.0], "w": [{"re": 1.0, "im": 0.0}],
              "alpha_beta": [[1, 1]], "uv": [{"u": {"re": 0.3, "im": 0}, "v": {"re": 0.5, "im": 0}}],
              "output_dir": str(work / "verify")}
    check("run config", "run_config", config)
    cfg_path = work / "run.json"
    cfg_path.write_text(json.dumps(config))
    run(["verify", "--config", str(cfg_path), "--only", "AC10", "--only", "AC13"], expect=3)
    check("verify report", "report", json.loads((work / "verify" / "report.json").read_text()))

    print(f"{failures} schema violation(s)")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
