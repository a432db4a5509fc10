from pydantic_settings import BaseSettings


class Settings(BaseSettings):
    """
    Configurações do leechkit carregadas de variáveis de ambiente.

    Reúne os limites das buscas exaustivas (formas discriminantes, fecho de
    grupos, busca de isometrias), o paralelismo e a camada HTTP.
    """

    # Application Configuration
    debug: bool = False
    log_level: str = "INFO"
    log_file: str = "logs/leechkit.log"

    # Performance settings Configuration
    max_workers: int = 4

    # HTTP Configuration
    api_host: str = "0.0.0.0"
    api_port: int = 8000

    # Discriminant form Configuration
    disc_form_max_order: int = 10**6
    disc_form_max_generators: int = 4
    isotropic_max_order: int = 10**6

    # Search caps Configuration
    closure_cap: int = 10**5
    isometry_node_cap: int = 10**8
    isometry_theta_bound: int = 8
    isometry_fingerprint_max_shell: int = 20000

    # Klein cubic Configuration
    smoothness_prime: int = 23
    scan_chunk_size: int = 250000

    # Claims Configuration
    theta_fallback_bound: int = 4

    class Config:
        env_file = ".env"
        case_sensitive = False
        extra = "ignore"


settings = Settings()
