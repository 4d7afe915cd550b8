"""Complex correntropy - robust similarity and MCCC adaptive filtering for complex data."""

__version__ = "0.1.0"
