"""
Utility Helper Functions Module for the Blowup Drawing Lab
Contains directory, timing, JSON rendering and error-handling helpers
"""

import os
import sys
import json
import time
import logging
import traceback
from contextlib import contextmanager
from typing import Any, Callable, Dict, Optional

logger = logging.getLogger(__name__)


# ============================================================================
# File and Directory Operations
# ============================================================================

def ensure_directory(directory_path: str) -> bool:
    """
    Ensure a directory exists, create if it doesn't

    Args:
        directory_path: Path to directory (empty string means the working directory)

    Returns:
        bool: True if directory exists or was created
    """
    if not directory_path:
        return True
    try:
        os.makedirs(directory_path, exist_ok=True)
        return True
    except Exception as e:
        logger.error(f"Error creating directory {directory_path}: {e}")
        return False


# ============================================================================
# Performance and Debugging Helpers
# ============================================================================

@contextmanager
def timer(name: str = "Operation"):
    """
    Context manager to measure execution time

    Args:
        name: Name of the operation

    Usage:
        with timer("Kleetope of icosahedron"):
            # code to time
    """
    start_time = time.perf_counter()
    try:
        yield
    finally:
        elapsed = time.perf_counter() - start_time
        logger.info(f"{name} took {elapsed:.4f} seconds")


# ============================================================================
# Data Serialization Helpers
# ============================================================================

def dumps_json(data: Any) -> str:
    """Render data as stable, human-readable JSON text (two-space indent, trailing newline)"""
    return json.dumps(data, indent=2, ensure_ascii=False) + "\n"


# ============================================================================
# Error Handling Helpers
# ============================================================================

def get_error_details(exception: Exception) -> Dict[str, Any]:
    """
    Get detailed error information

    Args:
        exception: Exception object

    Returns:
        Dict[str, Any]: Error details
    """
    exc_type, _, _ = sys.exc_info()

    return {
        'type': type(exception).__name__ if exception is not None else (exc_type.__name__ if exc_type else 'Unknown'),
        'message': str(exception),
        'traceback': traceback.format_exc(),
    }


class ErrorContext:
    """Context manager for error handling with custom actions"""

    def __init__(self, on_error: Optional[Callable] = None,
                 on_success: Optional[Callable] = None,
                 reraise: bool = True):
        """
        Initialize error context

        Args:
            on_error: Function to call on error (receives exception)
            on_success: Function to call on success
            reraise: Re-raise exception after handling
        """
        self.on_error = on_error
        self.on_success = on_success
        self.reraise = reraise
        self.exception: Optional[BaseException] = None

    def __enter__(self):
        return self

    def __exit__(self, exc_type, exc_value, exc_traceback):
        if exc_value is not None:
            if not isinstance(exc_value, Exception):
                return False
            self.exception = exc_value
            if self.on_error:
                self.on_error(exc_value)
            return not self.reraise

        if self.on_success:
            self.on_success()
        return False
