from typing import Any

from app.api.tools.json_formatter import dumps, report_output
from app.custom_logging import get_logger
from app.engine.demos import DEMOS
from app.engine.pipeline import run_pipeline
from app.settings import settings

GOLDEN_DEMOS = ("m4_1", "m6_1")


def golden_path(demo: str) -> str:
    return f"{demo}_report.json"


def summary_path(demo: str) -> str:
    return f"{demo}_summary.json"


def invariant_summary(report: dict[str, Any]) -> dict[str, Any]:
    """The part of a report that does not depend on floating point detail of the descent."""
    return {
        "source": report["source"],
        "seed": report["seed"],
        "route": report["route"],
        "labels": report["labels"],
        "linking_numbers_modulo_center": report["linking_numbers_modulo_center"],
        "homs": [
            {key: hom[key] for key in ("kind", "abelianization", "skipped_reason")} for hom in report["homs"]
        ],
        "planar": [
            {key: planar[key] for key in ("target", "abelianization", "skipped_reason")} for planar in report["planar"]
        ],
    }


def freeze_golden_job() -> None:
    """Writes the pipeline report and its invariant summary for each golden demo loop; review the diff before committing."""
    logger = get_logger("freeze_golden")
    settings.golden_dir.mkdir(parents=True, exist_ok=True)
    for demo in GOLDEN_DEMOS:
        report = report_output(run_pipeline(DEMOS[demo]()))
        target = settings.golden_dir / golden_path(demo)
        target.write_bytes(dumps(report))
        (settings.golden_dir / summary_path(demo)).write_bytes(dumps(invariant_summary(report)))
        logger.info("froze %s", target)
