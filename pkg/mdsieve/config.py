from typing import Any

DEFAULT_MAX_MN = 30
ENV_MAX_MN = "MDSIEVE_MAX_MN"


class Settings:
    def __init__(self, **kwargs: Any):
        self.max_mn: int = kwargs.get("max_mn", DEFAULT_MAX_MN)
        self.brute_force_max_mn: int = kwargs.get("brute_force_max_mn", 20)
        self.verify_brute_max_mn: int = kwargs.get("verify_brute_max_mn", 16)
        # python ints are exact at any width, this is a contract bound only
        self.burnside_max_mn: int = kwargs.get("burnside_max_mn", 62)
        self.max_sieve_bits: int = kwargs.get("max_sieve_bits", 2**31)

    def __repr__(self) -> str:
        return f"Settings({', '.join(f'{k}={v}' for k, v in self.__dict__.items())})"


default_settings = Settings()
