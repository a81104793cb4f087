"""Gera os relatórios JSON de referência da suíte e do estado geométrico."""
from __future__ import annotations

import logging
from pathlib import Path
import sys

# Garante que ``import harmonica`` funcione mesmo sem instalar o pacote.
BASE_DIR = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(BASE_DIR / "src"))

from harmonica.bochner_wiener import analisar_estado_geometrico, convergencia_estado_geometrico
from harmonica.espaco_fase import criar_espaco_fase
from harmonica.grupo import criar_grupo
from harmonica.io import escrever_saida, serializar
from harmonica.suite import ConfiguracaoExecucao, executar_suite

logger = logging.getLogger("gerar_relatorios")

CASOS = (
    ([2], "canonical"),
    ([2, 3], "canonical"),
    ([3], "weyl"),
    ([3, 3], "weyl"),
)


def gerar_relatorio_suite(ordens, tipo: str, destino: Path, *, semente: int = 7, tentativas: int = 20) -> bool:
    """Roda ``verify`` para um grupo e grava o relatório em ``destino``."""

    multiplicador = criar_espaco_fase(criar_grupo(ordens), tipo).multiplicador
    relatorio = executar_suite(ConfiguracaoExecucao(multiplicador, semente=semente, tentativas=tentativas))
    escrever_saida(serializar(relatorio.como_dicionario()), destino)
    return relatorio.aprovado


def gerar_relatorio_estado_geometrico(destino: Path, *, razao: float = 0.5) -> None:
    dimensoes = (4, 5, 6, 7, 8, 9)
    documento = {
        "razao": razao,
        "regularidade": {
            str(d): analisar_estado_geometrico(d, razao).como_dicionario() for d in dimensoes
        },
        "erro_limite": {str(d): erro for d, erro in convergencia_estado_geometrico((4, 6, 8, 10), razao).items()},
    }
    escrever_saida(serializar(documento), destino)


def main() -> None:
    logging.basicConfig(level=logging.INFO, format="%(levelname)s %(name)s: %(message)s")
    pasta = BASE_DIR / "docs" / "relatorios"
    pasta.mkdir(parents=True, exist_ok=True)

    for ordens, tipo in CASOS:
        nome = "x".join(f"Z{n}" for n in ordens)
        aprovado = gerar_relatorio_suite(ordens, tipo, pasta / f"verify_{nome}_{tipo}.json")
        logger.info("%s/%s: %s", nome, tipo, "aprovado" if aprovado else "reprovado")

    gerar_relatorio_estado_geometrico(pasta / "estado_geometrico.json")


if __name__ == "__main__":
    main()
