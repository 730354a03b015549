"""Dependency injection container for CLI using shared BaseContainer."""

from core.dependencies.container_base import BaseContainer
from core.domain.value_objects.window import Window
from core.settings import AppSettings


class CLIContainer(BaseContainer):
    """CLI container using the shared wiring."""

    def use_settings(self, settings: AppSettings) -> None:
        """Swap in settings loaded from ``--config``."""
        self.settings = settings
        self._reset_runner_caches()

    @property
    def default_window(self) -> Window:
        return self.settings.defaults.window
