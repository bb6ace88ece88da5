"""Report lines, number formatting and saved census reports"""

import json
from dataclasses import dataclass
from datetime import datetime
from pathlib import Path
from typing import Dict, List, Optional


@dataclass(frozen=True)
class CheckResult:
    """One verification outcome, printed as "PASS|FAIL <check-id> <detail>"."""

    check_id: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status} {self.check_id} {self.detail}".rstrip()


def all_passed(results: List[CheckResult]) -> bool:
    return all(result.passed for result in results)


def format_count(value: int, output_format: str = "human", group_digits: int = 5) -> str:
    """
    Decimal rendering of an exact count.

    Human mode groups digits from the right (5 per group by default);
    machine mode prints plain digits.
    """
    digits = str(abs(value))
    if output_format == "human" and group_digits > 0 and len(digits) > group_digits:
        head = len(digits) % group_digits
        groups = [digits[:head]] if head else []
        groups += [digits[i:i + group_digits] for i in range(head, len(digits), group_digits)]
        digits = " ".join(groups)
    return f"-{digits}" if value < 0 else digits


def save_census_report(
    reduced_rows: List[Dict],
    extremal_rows: List[Dict],
    checks: Optional[List[CheckResult]] = None,
    output_dir: str = "data/outputs",
):
    """
    Save reproduced tables to JSON and markdown files.

    Args:
        reduced_rows: Dicts with n, k, computed, published
        extremal_rows: CensusResult.to_dict() entries, optionally with a 'published' dict
        checks: Comparison results to list at the end
        output_dir: Directory to save outputs

    Returns:
        (json_file, md_file)
    """
    output_path = Path(output_dir)
    output_path.mkdir(parents=True, exist_ok=True)

    timestamp = datetime.now().strftime("%Y%m%d_%H%M%S")
    checks = checks or []

    # Save as JSON (counts as decimal strings so they survive any reader)
    json_file = output_path / f"census_tables_{timestamp}.json"
    with open(json_file, 'w', encoding='utf-8') as f:
        json.dump(
            {
                'reduced_rectangles': reduced_rows,
                'extremal': extremal_rows,
                'checks': [check.line() for check in checks],
            },
            f,
            indent=2,
            default=str,
        )
    print(f"✓ Saved JSON: {json_file}")

    # Save as Markdown report
    md_file = output_path / f"census_report_{timestamp}.md"
    with open(md_file, 'w', encoding='utf-8') as f:
        f.write("# Latin Rectangle Census Report\n\n")
        f.write(f"**Generated:** {datetime.now().strftime('%Y-%m-%d %H:%M:%S')}\n\n")
        f.write("---\n\n")

        f.write("## Reduced Latin rectangles\n\n")
        f.write("| n | k | computed | published |\n|---|---|---|---|\n")
        for row in reduced_rows:
            published = row.get('published')
            f.write(
                f"| {row['n']} | {row['k']} | {format_count(row['computed'])} | "
                f"{format_count(published) if published is not None else 'N/A'} |\n"
            )
        f.write("\n")

        if extremal_rows:
            f.write("## Extremal m(B)\n\n")
            f.write("| n | k | classes | min m | # min | max m | max unique |\n|---|---|---|---|---|---|---|\n")
            for row in extremal_rows:
                f.write(
                    f"| {row['n']} | {row['k']} | {row['class_count']} | {row['min_m']} | "
                    f"{row['min_count']} | {row['max_m']} | {'yes' if row['max_unique'] else 'no'} |\n"
                )
            f.write("\n")

        if checks:
            f.write("## Checks\n\n")
            for check in checks:
                f.write(f"- `{check.line()}`\n")
            f.write("\n")

    print(f"✓ Saved Markdown: {md_file}")

    return json_file, md_file
