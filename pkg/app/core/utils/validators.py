"""
This module contains the validators for command options.
"""

from typing import Any, Dict, Optional, Tuple

from .constants import CLUSTER_CONFIG, ERROR_MESSAGES
from .exceptions import OptionsValidationException


class CommandOptionsValidator:
    def __init__(self, max_m: Optional[int] = None):
        self.max_m = max_m if max_m is not None else CLUSTER_CONFIG['MAX_M']

    def validate(self, options: Dict[str, Any]) -> Dict[str, Any]:
        """
        Validate the global options shared by the mcluster commands
        Args:
            options: Dictionary of parsed command options
        Returns:
            Dictionary with 'm', 'window', 'max_cliques' and 'workers' normalised
        Raises:
            OptionsValidationException: If any option is out of range
        """
        validated = {}
        validated['m'] = self._validate_m(options.get('m'))
        validated['window'] = self._validate_window(options.get('window'), validated['m'])
        validated['max_cliques'] = self._validate_positive(
            options.get('max_cliques'), CLUSTER_CONFIG['MAX_CLIQUES'], 'INVALID_MAX_CLIQUES'
        )
        validated['workers'] = self._validate_positive(
            options.get('workers'), CLUSTER_CONFIG['WORKERS'], 'INVALID_WORKERS'
        )
        return validated

    def _validate_m(self, m: Any) -> int:
        """Validate m >= 1 and below the configured maximum"""
        if m is None:
            m = 1
        if isinstance(m, bool) or not isinstance(m, int) or not 1 <= m <= self.max_m:
            raise OptionsValidationException(
                ERROR_MESSAGES['INVALID_M'].format(max_m=self.max_m, m=m)
            )
        return m

    def _validate_window(self, window: Any, m: int) -> Tuple[int, int]:
        """Parse LOW:HIGH, defaulting to the configured window for m"""
        minimum = m + 2
        if window is None or window == '':
            return CLUSTER_CONFIG['WINDOW_LOW'], m + CLUSTER_CONFIG['WINDOW_PAD']
        if isinstance(window, (tuple, list)) and len(window) == 2:
            low, high = window
        else:
            try:
                low_text, high_text = str(window).split(':')
                low, high = int(low_text), int(high_text)
            except ValueError:
                raise OptionsValidationException(
                    ERROR_MESSAGES['INVALID_WINDOW'].format(minimum=minimum, window=window)
                )
        if low > 0 or high < minimum:
            raise OptionsValidationException(
                ERROR_MESSAGES['INVALID_WINDOW'].format(minimum=minimum, window=window)
            )
        return int(low), int(high)

    def _validate_positive(self, value: Any, default: int, message_key: str) -> int:
        """Validate an optional positive integer option"""
        if value is None:
            return default
        if isinstance(value, bool) or not isinstance(value, int) or value < 1:
            raise OptionsValidationException(ERROR_MESSAGES[message_key].format(value=value))
        return value
