import asyncio
from types import SimpleNamespace

from sinc_dqm.harness.config import CaseConfig
from sinc_dqm.integrators import SolveStatus
from sinc_dqm.stats import CaseStatistics, CaseStatisticsRecord, FileLogger, MonitorDaemon

def finished_record(statistics, case, status=SolveStatus.COMPLETED, linf=1.5e-3):
    record = statistics.create_record(case)
    record.case_started()
    report = SimpleNamespace(grid=SimpleNamespace(n_nodes=46), steps_taken=400, status=status, linf=linf)
    record.case_completed(report)
    return record

def test_record_csv_matches_its_header():
    statistics = CaseStatistics()
    record = finished_record(statistics, CaseConfig("fadeout", "rk4", 0.2, 0.0125))
    header = record.csv_header().rstrip("\n").split(",")
    values = record.to_csv().rstrip("\n").split(",")
    assert len(header) == len(values)
    row = dict(zip(header, values))
    assert row["case_id"] == "advection_dispersion-RK4-dx0.2-dt0.0125"
    assert row["n_nodes"] == "46"
    assert row["status"] == "completed"
    assert float(row["linf"]) == 1.5e-3
    assert float(row["rss_mb"]) > 0.0
    assert record.wall_time >= 0.0

def test_statistics_summary():
    statistics = CaseStatistics()
    assert str(statistics) == "No cases executed."
    statistics.log_record(finished_record(statistics, CaseConfig("fadeout", "rk4", 0.2, 0.0125)))
    statistics.log_record(finished_record(statistics, CaseConfig("pure_advection", "fore", 50, 50),
                                          status=SolveStatus.DIVERGED, linf=None))
    no_cases, completed, diverged, _ = statistics.count_case_statistics()
    assert (no_cases, completed, diverged) == (2, 1, 1)
    assert str(statistics).startswith("2 cases / 1 completed / 1 diverged")

def test_monitor_daemon_writes_queued_records(tmp_path):
    daemons = []

    async def run():
        queue = asyncio.Queue()
        monitor_daemon = MonitorDaemon(queue, FileLogger(str(tmp_path), run_label="test"))
        daemons.append(monitor_daemon)
        monitor_task = asyncio.create_task(monitor_daemon.start())
        statistics = CaseStatistics(queue)
        for dx in (0.2, 0.1):
            statistics.log_record(finished_record(statistics, CaseConfig("fadeout", "heun", dx, 0.0125)))
        await queue.join()
        monitor_task.cancel()

    asyncio.run(run())

    assert daemons[0].records_written == 2
    lines = (tmp_path / f"{CaseStatisticsRecord.__name__}_test.csv").read_text().splitlines()
    assert lines[0].startswith("case_id,problem,method")
    assert len(lines) == 3
    assert lines[2].startswith("advection_dispersion-HEUN-dx0.1-dt0.0125,advection_dispersion,HEUN")

def test_file_logger_appends_to_an_existing_run(tmp_path):
    statistics = CaseStatistics()
    case = CaseConfig("fadeout", "rk4", 0.2, 0.0125)
    for _ in range(2):
        FileLogger(str(tmp_path), run_label="rerun").log_record(finished_record(statistics, case))
    lines = (tmp_path / f"{CaseStatisticsRecord.__name__}_rerun.csv").read_text().splitlines()
    assert len(lines) == 3
    assert lines[0].startswith("case_id,")
