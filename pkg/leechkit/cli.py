"""
Linha de comando do leechkit.

    leechkit catalog E8
    leechkit verify --fast --json
"""

import functools
import json
import sys
from pathlib import Path
from typing import Optional

import click
from loguru import logger

from leechkit import __version__
from leechkit.config.logging import setup_logging
from leechkit.core.errors import LeechkitError
from leechkit.core.nikulin import s11_complement_form
from leechkit.schemas.schemas import ClaimStatus, DiscriminantFormSchema, LatticeSchema
from leechkit.services.claims_service import ClaimsService
from leechkit.services.klein_service import AUTOMORPHISMS, KleinService
from leechkit.services.lattice_service import LatticeService

EXIT_FAILED = 1
EXIT_ERROR = 2


def _read_lattice(path: str):
    return LatticeSchema.model_validate_json(Path(path).read_text(encoding="utf-8")).to_lattice()


def _echo(model) -> None:
    click.echo(model.model_dump_json(indent=2))


def _handle_errors(func):
    """Erros do núcleo viram mensagem em stderr e código de saída 2."""

    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except LeechkitError as e:
            logger.debug(f"[CLI] Erro | comando={func.__name__} | erro={str(e)}")
            click.echo(f"erro: {e}", err=True)
            sys.exit(EXIT_ERROR)

    return wrapper


@click.group()
@click.version_option(__version__, prog_name="leechkit")
@click.option("--log-level", default=None, help="Nível de log (padrão: settings.log_level).")
def main(log_level: Optional[str]) -> None:
    """Reticulados exatos, construções de Niemeier e a cúbica de Klein."""
    setup_logging(log_level)


@main.command()
@click.argument("name")
@click.option("--n", "n", type=int, default=None, help="Posto para A_n e D_n.")
@click.option("--k", "k", type=int, default=None, help="Entrada de rank1(k).")
@click.option("--scale", type=int, default=1, show_default=True)
@_handle_errors
def catalog(name: str, n: Optional[int], k: Optional[int], scale: int) -> None:
    """Emite o JSON de um reticulado do catálogo."""
    _echo(LatticeService().catalogo(name, n=n, k=k, scale=scale))


@main.command()
@click.argument("name")
@click.option("--verify-roots", is_flag=True, help="Conta as raízes e compara com 24·h.")
@_handle_errors
def niemeier(name: str, verify_roots: bool) -> None:
    """Constrói uma linha da tabela de Niemeier."""
    _echo(LatticeService().niemeier(name, check_roots=verify_roots))


@main.command(name="enum")
@click.argument("lattice_json", type=click.Path(exists=True, dir_okay=False))
@click.option("--bound", type=int, required=True, help="Limite para |norma|.")
@click.option("--list", "keep", is_flag=True, help="Lista os vetores (a menos de sinal).")
@click.option("--limit", type=int, default=None, help="Aborta acima deste número de vetores.")
@_handle_errors
def enum_command(lattice_json: str, bound: int, keep: bool, limit: Optional[int]) -> None:
    """Enumera vetores curtos de um reticulado definido."""
    if bound <= 0:
        raise click.BadParameter("o limite precisa ser positivo", param_hint="--bound")
    _echo(LatticeService().enumerar(_read_lattice(lattice_json), bound, keep_vectors=keep, limit=limit))


@main.command()
@click.argument("first", type=click.Path(exists=True, dir_okay=False))
@click.argument("second", type=click.Path(exists=True, dir_okay=False))
@click.option("--node-cap", type=int, default=None)
@_handle_errors
def isom(first: str, second: str, node_cap: Optional[int]) -> None:
    """Decide se dois reticulados definidos são isométricos."""
    result = LatticeService().isometria(_read_lattice(first), _read_lattice(second), node_cap=node_cap)
    _echo(result)
    if result.status == "not_isometric":
        sys.exit(EXIT_FAILED)


@main.command()
@click.option("--det", "det", type=int, required=True)
@click.option("--rank", "rank", type=int, default=3, show_default=True)
@click.option("--disc", "disc", type=click.Path(exists=True, dir_okay=False), default=None,
              help="JSON da forma discriminante (padrão: forma exigida de T_ψ).")
@_handle_errors
def genus(det: int, rank: int, disc: Optional[str]) -> None:
    """Representantes do gênero ternário positivo par com a forma dada."""
    if rank != 3:
        raise click.BadParameter("apenas formas ternárias", param_hint="--rank")
    if disc:
        form = DiscriminantFormSchema.model_validate_json(Path(disc).read_text(encoding="utf-8")).to_form()
    else:
        form = s11_complement_form()
    classes = LatticeService().genero_ternario(det, form)
    click.echo(json.dumps([c.model_dump() for c in classes], indent=2, ensure_ascii=False))


@main.command()
@click.argument("t_json", type=click.Path(exists=True, dir_okay=False))
@click.option("--vector", required=True, help='Coordenadas em T, por exemplo "1,0,0".')
@click.option("--s", "s_json", type=click.Path(exists=True, dir_okay=False), default=None,
              help="Complemento S (padrão: S11).")
@click.option("--ambient-det", type=int, default=2, show_default=True)
@_handle_errors
def divisor(t_json: str, vector: str, s_json: Optional[str], ambient_det: int) -> None:
    """Divisor de um vetor de T no reticulado ambiente."""
    try:
        coords = [int(x) for x in vector.split(",")]
    except ValueError:
        raise click.BadParameter("vetor inválido", param_hint="--vector") from None
    t = _read_lattice(t_json)
    s = _read_lattice(s_json) if s_json else None
    value = LatticeService().divisor(t, coords, s, ambient_det)
    click.echo(json.dumps({"vector": coords, "degree": int(t.norm(coords)), "divisor": value}))


@main.group()
def klein() -> None:
    """Cúbica de Klein."""


@klein.command()
@click.option("--prime", type=int, default=None, help="Primo da varredura (padrão: settings.smoothness_prime).")
@_handle_errors
def smooth(prime: Optional[int]) -> None:
    """Conta pontos singulares de V(h) sobre 𝔽_p."""
    result = KleinService().lisura(prime)
    _echo(result)
    if not result.smooth:
        sys.exit(EXIT_FAILED)


@klein.command()
@click.option("--compare-lattice", is_flag=True, help="Compara com L2(11) agindo em N23.")
@_handle_errors
def ranks(compare_lattice: bool) -> None:
    """Postos co-invariantes de ψ e β."""
    _echo(KleinService().postos(compare_lattice))


@klein.command(name="fixed-lines")
@click.option("--automorphism", type=click.Choice(sorted(AUTOMORPHISMS)), default="psi", show_default=True)
@_handle_errors
def fixed_lines(automorphism: str) -> None:
    """Retas fixas de um automorfismo diagonal."""
    _echo(KleinService().retas_fixas(automorphism))


@main.command()
@click.option("--claim", "claim_id", default=None, help="Executa apenas este claim.")
@click.option("--json", "as_json", is_flag=True, help="Saída como lista JSON de relatórios.")
@click.option("--fast", is_flag=True, help="Pula claims marcados como lentos.")
@_handle_errors
def verify(claim_id: Optional[str], as_json: bool, fast: bool) -> None:
    """Executa os claims do manifesto."""
    service = ClaimsService()
    reports = [service.run_claim(claim_id)] if claim_id else service.run_all(fast=fast)
    if as_json:
        click.echo(json.dumps([r.model_dump(mode="json") for r in reports], indent=2, ensure_ascii=False))
    else:
        for r in reports:
            click.echo(f"{r.status.value:<13} {r.id:<22} {r.elapsed:>8.2f}s  {r.anchor}")
    if any(r.status == ClaimStatus.FAIL for r in reports):
        sys.exit(EXIT_FAILED)


if __name__ == "__main__":
    main()
