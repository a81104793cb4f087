"""Geradores aleatórios reprodutíveis de vetores, operadores e funções de fase."""
from __future__ import annotations

import numpy as np

from .espaco_fase import EspacoFase
from .representacao import Operador


def criar_gerador(semente: int) -> np.random.Generator:
    return np.random.default_rng(semente)


def vetor_aleatorio(rng: np.random.Generator, n: int) -> np.ndarray:
    return rng.standard_normal(n) + 1j * rng.standard_normal(n)


def unitario_aleatorio(rng: np.random.Generator, n: int) -> np.ndarray:
    """Unitário distribuído pela medida de Haar (QR com correção de fase)."""

    z = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    q, r = np.linalg.qr(z)
    d = np.diag(r)
    return q * (d / np.abs(d))


def operador_aleatorio(rng: np.random.Generator, n: int) -> Operador:
    return Operador(rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n)))


def hermitiano_aleatorio(rng: np.random.Generator, n: int) -> Operador:
    A = operador_aleatorio(rng, n).matriz
    return Operador((A + A.conj().T) / 2)


def positivo_aleatorio(rng: np.random.Generator, n: int) -> Operador:
    A = operador_aleatorio(rng, n).matriz
    return Operador(A.conj().T @ A)


def densidade_aleatoria(rng: np.random.Generator, n: int) -> Operador:
    P = positivo_aleatorio(rng, n)
    return P / P.traco().real


def indefinido_aleatorio(rng: np.random.Generator, n: int, margem: float = 0.5) -> Operador:
    """Hermitiano com menor autovalor exatamente ``−margem``."""

    autovalores = rng.uniform(0.5, 1.5, n)
    autovalores[0] = -margem
    V = unitario_aleatorio(rng, n)
    return Operador((V * autovalores) @ V.conj().T)


def funcao_aleatoria(rng: np.random.Generator, espaco: EspacoFase):
    from .convolucao import FuncaoFase

    return FuncaoFase(espaco, vetor_aleatorio(rng, espaco.num_pontos))


def funcao_real_aleatoria(rng: np.random.Generator, espaco: EspacoFase):
    from .convolucao import FuncaoFase

    return FuncaoFase(espaco, rng.standard_normal(espaco.num_pontos))


def funcao_positiva_aleatoria(rng: np.random.Generator, espaco: EspacoFase):
    from .convolucao import FuncaoFase

    return FuncaoFase(espaco, rng.uniform(0.0, 1.0, espaco.num_pontos))


def janela_simetrica_aleatoria(rng: np.random.Generator, paridade: np.ndarray) -> np.ndarray:
    """Vetor unitário com ``R φ = φ``."""

    v = vetor_aleatorio(rng, paridade.shape[0])
    v = v + paridade @ v
    return v / np.linalg.norm(v)


def fase_par_aleatoria(rng: np.random.Generator, grupo_fase) -> np.ndarray:
    """Fase ``a: Ξ → T`` com ``a(0) = 1`` e ``a(−z) = a(z)``."""

    angulos = rng.uniform(0.0, 2 * np.pi, grupo_fase.tamanho)
    negativo = grupo_fase.indices(-grupo_fase.coordenadas)
    angulos = np.where(np.arange(grupo_fase.tamanho) <= negativo, angulos, angulos[negativo])
    angulos[0] = 0.0
    return np.exp(1j * angulos)
