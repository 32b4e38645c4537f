"""
Utility functions for verification reports written by ``verify --json``
"""
import sys
import os
import csv
import json
import logging
from collections import Counter
from datetime import datetime
from pathlib import Path

# Add the parent directory to the path
sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from components.verification.reports import VerificationReport
from utils.logging_config import setup_logging
from utils.error_handling import handle_errors, ErrorAction

logger = logging.getLogger(__name__)

CSV_COLUMNS = ('check', 'host', 'op', 'verdict', 'witness')


def load_report(path) -> VerificationReport:
    """Read a JSON report back into a VerificationReport."""
    text = Path(path).read_text(encoding='utf-8')
    return VerificationReport(**json.loads(text))


def summarize_report(report: VerificationReport) -> str:
    """
    One line per check with its pass/fail/skip counts, then the first failures.
    """
    per_check = {}
    for r in report.records:
        per_check.setdefault(r.check, Counter())[r.verdict] += 1
    counts = report.counts()
    lines = [f"suite={report.suite} seed={report.seed} max_vertices={report.max_vertices} "
             f"pass={counts['pass']} fail={counts['fail']} skip={counts['skip']}"]
    for check in sorted(per_check):
        c = per_check[check]
        lines.append(f"  {check:<24} pass={c['pass']} fail={c['fail']} skip={c['skip']}")
    for r in report.failures()[:10]:
        lines.append(f"  FAIL {r.check} host={r.host} op={r.op} witness={json.dumps(r.witness, default=str)}")
    lines.append("PASSED" if report.passed else "FAILED")
    return '\n'.join(lines)


def export_report_csv(report: VerificationReport, filename=None) -> Path:
    """Write one CSV row per record; the witness is kept as a JSON string."""
    if filename is None:
        timestamp = datetime.now().strftime("%Y%m%d_%H%M%S")
        filename = f"verify_{report.suite}_{timestamp}.csv"
    path = Path(filename)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, 'w', newline='', encoding='utf-8') as f:
        writer = csv.writer(f)
        writer.writerow(CSV_COLUMNS)
        for r in report.records:
            writer.writerow([r.check, r.host or '', r.op or '', r.verdict,
                             json.dumps(r.witness, sort_keys=True, default=str)])
    logger.info(f"Exported {len(report.records)} records to {path}")
    return path


@handle_errors(action=ErrorAction.RETURN_NONE)
def _summary_command(path):
    print(summarize_report(load_report(path)))


@handle_errors(action=ErrorAction.RETURN_NONE)
def _csv_command(path, filename=None):
    out = export_report_csv(load_report(path), filename)
    print(f"Exported to {out}")


if __name__ == "__main__":
    setup_logging()

    # Command line argument parsing
    if len(sys.argv) > 2:
        command = sys.argv[1].lower()

        if command == "summary":
            _summary_command(sys.argv[2])
        elif command == "csv":
            _csv_command(sys.argv[2], sys.argv[3] if len(sys.argv) > 3 else None)
        else:
            print("Unknown command. Available commands: summary, csv")
    else:
        print("Examples:")
        print("  python utils/report_tools.py summary report.json")
        print("  python utils/report_tools.py csv report.json out.csv")
