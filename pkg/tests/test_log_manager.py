import logging

from logger.log_manager import LOG_FORMAT, LogManager, SmartFormatter


def _record(name, level, message, **extra):
    record = logging.LogRecord(name, level, __file__, 1, message, (), None)
    for key, value in extra.items():
        setattr(record, key, value)
    return record


def test_plain_formatter_uses_prefixes():
    formatter = SmartFormatter(LOG_FORMAT, use_colors=False)
    text = formatter.format(_record("matcher.bb_graph", logging.INFO, "found 2"))
    assert "[INFO][INFO]" in text
    assert "[BBG]matcher.bb_graph:" in text
    assert "\033[" not in text


def test_color_formatter_paints_query_tags():
    formatter = SmartFormatter(LOG_FORMAT, use_colors=True)
    text = formatter.format(_record("benchmark.query.q1", logging.WARNING, "[QRY:q1] timed out"))
    assert "\033[34m[QRY:q1]\033[0m" in text
    assert "\033[93m[WARNING]\033[0m" in text


def test_initialize_logger_file_handler(tmp_path):
    root = logging.getLogger()
    saved = list(root.handlers), root.level
    try:
        log_file = str(tmp_path / "logs" / "run.log")
        logger = LogManager.initialize_logger(log_to_file=True, log_level="DEBUG", log_file=log_file)
        assert logger.name == "Main"
        assert root.level == logging.DEBUG
        assert len(root.handlers) == 2
        logging.getLogger("graph_io.documents").info("loaded")
        for handler in root.handlers:
            handler.flush()
        assert "graph_io.documents: loaded" in (tmp_path / "logs" / "run.log").read_text()
    finally:
        for handler in root.handlers:
            handler.close()
        root.handlers[:] = saved[0]
        root.setLevel(saved[1])


def test_query_events_carry_the_query_id(caplog):
    with caplog.at_level(logging.INFO, logger="benchmark.query.path3"):
        LogManager.log_query_event("path3", "INFO", "2 embeddings", matcher="bbgraph")
    record = caplog.records[-1]
    assert record.name == "benchmark.query.path3"
    assert record.getMessage() == "[QRY:path3] 2 embeddings"
    assert record.query_id == "path3"
    assert record.matcher == "bbgraph"
    assert LogManager.get_query_logger("path3") is LogManager.get_query_logger("path3")
