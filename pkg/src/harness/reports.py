"""Report emission: JSON document plus a plain-text table."""

import json
from pathlib import Path

from .benchmark import BenchmarkReport

REPORT_JSON = "report.json"
REPORT_TABLE = "report.txt"


def _fmt(value: float | None, digits: int = 6) -> str:
    return "-inf" if value is None else f"{value:.{digits}f}"


def render_table(report: BenchmarkReport) -> str:
    lines = ["Experiment parameters"]
    width = max(len(k) for k in report.header)
    for key, value in report.header.items():
        lines.append(f"  {key:<{width}}  {value}")

    if report.baselines:
        lines += ["", "Baselines", f"  {'image':<24} {'F original':>14} {'F equalized':>14} {'delta F':>14}"]
        for b in report.baselines:
            lines.append(
                f"  {b.image:<24} {_fmt(b.original.F if not b.original.degenerate else None):>14}"
                f" {_fmt(b.equalized.F if not b.equalized.degenerate else None):>14}"
                f" {_fmt(b.delta_f):>14}"
            )

    lines += [
        "",
        "Cells",
        f"  {'image':<24} {'variant':<18} {'mean rate':>14} {'mean final F':>14} {'gens':>12} {'failed':>6}",
    ]
    for cell in report.cells:
        gens = ",".join(str(g) for g in cell.generations) or "-"
        failed = len(cell.runs) - len(cell.completed)
        lines.append(
            f"  {cell.image:<24} {cell.variant:<18} {_fmt(cell.mean_improvement_rate):>14}"
            f" {_fmt(cell.mean_final_f):>14} {gens:>12} {failed:>6}"
        )

    lines += ["", "Ranking by mean improvement rate"]
    for position, entry in enumerate(report.ranking, start=1):
        lines.append(
            f"  {position}. {entry.variant:<18} {entry.group:<14} {_fmt(entry.mean_improvement_rate)}"
        )
    selected = ", ".join(str(r.variant) for r in report.selected) or "none"
    lines += ["", f"Selected: {selected}"]

    for image, error in report.image_errors.items():
        lines.append(f"Skipped {image}: {error}")
    return "\n".join(lines) + "\n"


def report_json(report: BenchmarkReport) -> str:
    return json.dumps(report.to_document(), indent=2) + "\n"


def write_report(report: BenchmarkReport, output_dir: str | Path) -> tuple[Path, Path]:
    """Write report.json and report.txt into `output_dir`."""
    output_dir = Path(output_dir)
    output_dir.mkdir(parents=True, exist_ok=True)
    json_path = output_dir / REPORT_JSON
    table_path = output_dir / REPORT_TABLE
    json_path.write_text(report_json(report), encoding="utf-8")
    table_path.write_text(render_table(report), encoding="utf-8")
    return json_path, table_path
