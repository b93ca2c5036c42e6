from app.api.tools.json_formatter import dumps
from app.custom_logging import get_logger
from app.engine.demos import DEMOS
from app.settings import settings


def dump_demos_job() -> None:
    logger = get_logger("dump_demos")
    settings.demo_dir.mkdir(parents=True, exist_ok=True)
    for name, build in DEMOS.items():
        target = settings.demo_dir / f"{name}.json"
        target.write_bytes(dumps(build().to_document().model_dump(mode="json")))
        logger.info("wrote %s", target)
