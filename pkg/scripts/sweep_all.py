"""Run every identity sweep and write one JSON report per identity."""

import argparse
import json
import sys
from dataclasses import asdict, dataclass
from pathlib import Path

from orbitcalc.verification import RANK_IDENTITIES, SIZE_IDENTITIES, default_jobs, run_identity


@dataclass(frozen=True)
class SweepConfig:
    max_n: int = 10
    max_size: int = 16
    families: str = "BCD"
    jobs: int = 1
    out_dir: str = "reports"


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=SweepConfig.max_n)
    ap.add_argument("--max-size", type=int, default=SweepConfig.max_size)
    ap.add_argument("--families", default=SweepConfig.families)
    ap.add_argument("--jobs", type=int, default=default_jobs())
    ap.add_argument("--out-dir", default=SweepConfig.out_dir)
    cfg = SweepConfig(**{k.replace("-", "_"): v for k, v in vars(ap.parse_args(argv)).items()})

    out = Path(cfg.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    failed = False
    for identity in RANK_IDENTITIES + SIZE_IDENTITIES:
        families = "D" if identity == "achar" else cfg.families
        report = run_identity(identity, families, max_n=cfg.max_n, max_size=cfg.max_size, jobs=cfg.jobs)
        js = report.to_json()
        js["config"] = asdict(cfg)
        (out / f"{identity}.json").write_text(json.dumps(js, indent=2, sort_keys=True) + "\n")
        flag = "report-only" if report.report_only else ("ok" if report.ok else "FAILED")
        print(f"{identity:26s} {report.passes:6d}/{report.total:<6d} {report.duration:7.2f}s  {flag}")
        failed |= not report.ok
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
