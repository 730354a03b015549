"""
Standardized CLI colors and message formatting for consistent visualization.
"""

from core.domain.entities.calibration import (
    Calibration,
    EnvelopeReport,
    RejectionSummary,
    TestReport,
)
from rich.table import Table


class Colors:

    # Status colors
    SUCCESS = "green"
    WARNING = "yellow"
    ERROR = "red"
    INFO = "blue"
    MUTED = "dim"

    # Action colors
    PROCESS = "blue"
    CONFIG = "cyan"

    # Test outcome colors
    REJECT = "red"
    ACCEPT = "green"


class Icons:

    SUCCESS = "✅"
    WARNING = "⚠️"
    ERROR = "❌"
    INFO = "ℹ️"

    FILE = "💾"
    DICE = "🎲"
    CHART = "📈"


class Messages:

    @staticmethod
    def success(message: str, icon: str = Icons.SUCCESS) -> str:
        return f"[{Colors.SUCCESS}]{icon} {message}[/{Colors.SUCCESS}]"

    @staticmethod
    def warning(message: str, icon: str = Icons.WARNING) -> str:
        return f"[{Colors.WARNING}]{icon} {message}[/{Colors.WARNING}]"

    @staticmethod
    def error(message: str, icon: str = Icons.ERROR) -> str:
        return f"[{Colors.ERROR}]{icon} {message}[/{Colors.ERROR}]"

    @staticmethod
    def info(message: str, icon: str = Icons.INFO) -> str:
        return f"[{Colors.INFO}]{icon} {message}[/{Colors.INFO}]"

    @staticmethod
    def process(message: str, icon: str = "") -> str:
        prefix = icon + " " if icon else ""
        return f"[{Colors.PROCESS}]{prefix}{message}[/{Colors.PROCESS}]"

    @staticmethod
    def muted(message: str) -> str:
        return f"[{Colors.MUTED}]{message}[/{Colors.MUTED}]"

    @staticmethod
    def written(path: str, what: str) -> str:
        return Messages.success(f"{what} written to {path}", icon=Icons.FILE)


def format_decision(reject: bool) -> str:
    if reject:
        return f"[bold {Colors.REJECT}]reject[/bold {Colors.REJECT}]"
    return f"[{Colors.ACCEPT}]accept[/{Colors.ACCEPT}]"


def calibration_table(calibration: Calibration) -> Table:
    table = Table(title=f"Calibration of {calibration.statistic.id.value}")
    table.add_column("Model", style="cyan")
    table.add_column("Sims", justify="right")
    table.add_column("Mean", justify="right")
    table.add_column("Variance", justify="right")
    table.add_column("Skewness", justify="right")
    table.add_column("Excess kurtosis", justify="right")
    table.add_row(
        calibration.model.label,
        str(calibration.n_sims),
        f"{calibration.mean:.6g}",
        f"{calibration.variance:.6g}",
        f"{calibration.skewness:.3f}",
        f"{calibration.excess_kurtosis:.3f}",
    )
    return table


def test_reports_table(reports: list[TestReport], title: str) -> Table:
    table = Table(title=title)
    table.add_column("r", justify="right", style="cyan")
    table.add_column("Value", justify="right")
    table.add_column("z", justify="right")
    table.add_column("p", justify="right")
    table.add_column("Decision")
    for report in reports:
        table.add_row(
            f"{report.statistic.r:g}",
            f"{report.value:.6g}",
            f"{report.z:.3f}",
            f"{report.p_value:.4f}",
            format_decision(report.reject),
        )
    return table


def envelope_summary(report: EnvelopeReport) -> str:
    outside = sum(report.outside)
    return (
        f"{report.statistic.id.value}: p = {report.p_value:.4f} "
        f"({format_decision(report.reject)} at alpha = {report.alpha:g}); "
        f"{outside} of {len(report.grid)} grid points outside the envelope"
    )


def rejection_table(summary: RejectionSummary) -> Table:
    table = Table(title="Rejection rate")
    table.add_column("Model", style="cyan")
    table.add_column("Statistic", style="green")
    table.add_column("Alpha", justify="right")
    table.add_column("Rejected", justify="right")
    table.add_column("Rate", justify="right", style="bold")
    table.add_row(
        summary.model,
        summary.statistic,
        f"{summary.alpha:g}",
        f"{summary.n_rejected}/{summary.n_reps}",
        f"{100 * summary.rate:.1f}%",
    )
    return table
