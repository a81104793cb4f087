"""Análise harmônica quântica sobre espaços de fase abelianos finitos."""

from .convolucao import (
    ElementoMisto,
    FuncaoFase,
    convolucao_ab,
    convolucao_fa,
    convolucao_ff,
    norma_lp,
    norma_schatten,
    produto_banach,
)
from .espaco_fase import (
    EspacoFase,
    PontoFase,
    criar_espaco_fase,
    multiplicador_canonico,
    multiplicador_modificado,
    multiplicador_weyl,
    verificar_multiplicador,
)
from .fourier import FuncaoDual, fourier_simpletico, fourier_weyl, fourier_weyl_inversa, wigner
from .grupo import TOLERANCIA_PADRAO, GrupoAbeliano, criar_grupo
from .representacao import Operador, Representacao, construir_representacao

__all__ = [
    "TOLERANCIA_PADRAO",
    "GrupoAbeliano",
    "criar_grupo",
    "EspacoFase",
    "PontoFase",
    "criar_espaco_fase",
    "multiplicador_canonico",
    "multiplicador_modificado",
    "multiplicador_weyl",
    "verificar_multiplicador",
    "Operador",
    "Representacao",
    "construir_representacao",
    "FuncaoFase",
    "ElementoMisto",
    "convolucao_ff",
    "convolucao_fa",
    "convolucao_ab",
    "produto_banach",
    "norma_lp",
    "norma_schatten",
    "FuncaoDual",
    "fourier_simpletico",
    "fourier_weyl",
    "fourier_weyl_inversa",
    "wigner",
]
