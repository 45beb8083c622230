"""Factory for creating search engine instances."""

from ..engines import DrsrEngine, MosrEngine, SearchEngine, SrEngine


class SearchEngineFactory:
    """Factory for creating search engine instances."""

    _ENGINES = {"drsr": DrsrEngine, "sr": SrEngine, "mosr": MosrEngine}

    @staticmethod
    def create_engine(method: str) -> SearchEngine:
        """Create the engine for a configured method.

        Args:
            method: ``drsr``, ``sr`` or ``mosr``

        Returns:
            SearchEngine instance

        Raises:
            ValueError: If the method is not supported
        """
        engine_class = SearchEngineFactory._ENGINES.get(method)
        if engine_class is None:
            raise ValueError(f"Unsupported search method: {method}")
        return engine_class()

    @staticmethod
    def available_methods() -> tuple:
        return tuple(SearchEngineFactory._ENGINES)
