"""Aritmética exata de grupos abelianos finitos, seus duais e caracteres."""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import cached_property
from typing import List, Sequence, Tuple, Union

import numpy as np

# Tolerância absoluta usada por todas as verificações de identidade.
TOLERANCIA_PADRAO = 1e-10


@dataclass(frozen=True)
class ElementoGrupo:
    """Elemento de ``Z_{n1} × … × Z_{nk}`` descrito pelos seus resíduos."""

    coords: Tuple[int, ...]

    def __iter__(self):
        return iter(self.coords)

    def __len__(self) -> int:
        return len(self.coords)


Elemento = Union[ElementoGrupo, Sequence[int]]


@dataclass(frozen=True)
class GrupoAbeliano:
    """Produto de grupos cíclicos com enumeração canônica.

    A ordem canônica dos elementos é lexicográfica em base mista, com a última
    coordenada variando mais rápido.
    """

    ordens: Tuple[int, ...]

    @property
    def tamanho(self) -> int:
        return math.prod(self.ordens)

    @property
    def posto(self) -> int:
        return len(self.ordens)

    @cached_property
    def vetor_ordens(self) -> np.ndarray:
        ordens = np.array(self.ordens, dtype=np.int64)
        ordens.setflags(write=False)
        return ordens

    @cached_property
    def passos(self) -> np.ndarray:
        passos = np.array(
            [math.prod(self.ordens[j + 1 :]) for j in range(self.posto)], dtype=np.int64
        )
        passos.setflags(write=False)
        return passos

    @cached_property
    def coordenadas(self) -> np.ndarray:
        """Matriz ``tamanho × posto`` com as coordenadas de todos os elementos."""

        tabela = np.array(
            list(itertools.product(*(range(n) for n in self.ordens))), dtype=np.int64
        ).reshape(self.tamanho, self.posto)
        tabela.setflags(write=False)
        return tabela

    def indices(self, coords: np.ndarray) -> np.ndarray:
        """Converte coordenadas (reduzidas ou não) em índices canônicos."""

        coords = np.asarray(coords, dtype=np.int64)
        return ((coords % self.vetor_ordens) * self.passos).sum(axis=-1)

    def indice(self, elemento: Elemento) -> int:
        return int(self.indices(np.array(_coordenadas_validas(self, elemento))))

    def elemento(self, indice: int) -> ElementoGrupo:
        if not 0 <= indice < self.tamanho:
            raise ValueError(f"Índice {indice} fora do intervalo [0, {self.tamanho})")
        return ElementoGrupo(tuple(int(c) for c in self.coordenadas[indice]))

    def elementos(self) -> List[ElementoGrupo]:
        return [self.elemento(i) for i in range(self.tamanho)]

    def zero(self) -> ElementoGrupo:
        return ElementoGrupo((0,) * self.posto)

    def __str__(self) -> str:
        return "x".join(f"Z{n}" for n in self.ordens)


def criar_grupo(ordens: Sequence[int]) -> GrupoAbeliano:
    """Cria ``Z_{n1} × … × Z_{nk}`` a partir das ordens cíclicas."""

    ordens = list(ordens)
    if not ordens:
        raise ValueError("A lista de ordens não pode ser vazia")
    for posicao, ordem in enumerate(ordens):
        if isinstance(ordem, bool) or not isinstance(ordem, (int, np.integer)):
            raise ValueError(f"Ordem inválida na posição {posicao}: {ordem!r} não é inteiro")
        if ordem < 2:
            raise ValueError(f"Ordem inválida na posição {posicao}: {ordem} < 2")
    return GrupoAbeliano(tuple(int(n) for n in ordens))


def _coordenadas_validas(grupo: GrupoAbeliano, elemento: Elemento) -> Tuple[int, ...]:
    coords = tuple(int(c) for c in elemento)
    if len(coords) != grupo.posto:
        raise ValueError(
            f"Elemento {coords} tem {len(coords)} coordenadas; o grupo {grupo} exige {grupo.posto}"
        )
    for c, n in zip(coords, grupo.ordens):
        if not 0 <= c < n:
            raise ValueError(f"Resíduo {c} fora de [0, {n}) no elemento {coords}")
    return coords


def somar(grupo: GrupoAbeliano, a: Elemento, b: Elemento) -> ElementoGrupo:
    ca = _coordenadas_validas(grupo, a)
    cb = _coordenadas_validas(grupo, b)
    return ElementoGrupo(tuple((x + y) % n for x, y, n in zip(ca, cb, grupo.ordens)))


def negar(grupo: GrupoAbeliano, a: Elemento) -> ElementoGrupo:
    ca = _coordenadas_validas(grupo, a)
    return ElementoGrupo(tuple((-x) % n for x, n in zip(ca, grupo.ordens)))


def fracao_caractere(x: np.ndarray, xi: np.ndarray, ordens: np.ndarray) -> np.ndarray:
    """Fase ``Σ_j x_j ξ_j / n_j`` reduzida a ``[0, k)``, vetorizada no último eixo."""

    return (((x * xi) % ordens) / ordens).sum(axis=-1)


def caractere(grupo: GrupoAbeliano, x: Elemento, xi: Elemento) -> complex:
    """Pareamento ``⟨x, ξ⟩ = exp(2πi Σ_j x_j ξ_j / n_j)``."""

    cx = np.array(_coordenadas_validas(grupo, x), dtype=np.int64)
    cxi = np.array(_coordenadas_validas(grupo, xi), dtype=np.int64)
    return complex(np.exp(2j * np.pi * fracao_caractere(cx, cxi, grupo.vetor_ordens)))


def tabela_caracteres(grupo: GrupoAbeliano) -> np.ndarray:
    """Matriz ``χ[y, ξ] = ⟨y, ξ⟩`` na ordem canônica."""

    coords = grupo.coordenadas
    fracao = fracao_caractere(coords[:, None, :], coords[None, :, :], grupo.vetor_ordens)
    return np.exp(2j * np.pi * fracao)


def eh_dois_regular(grupo: GrupoAbeliano) -> bool:
    return all(n % 2 == 1 for n in grupo.ordens)


def metade(grupo: GrupoAbeliano, x: Elemento) -> ElementoGrupo:
    """Único ``y`` com ``y + y = x``; só existe quando todas as ordens são ímpares."""

    if not eh_dois_regular(grupo):
        raise ValueError(f"O grupo {grupo} não é 2-regular: a divisão por 2 não está definida")
    cx = _coordenadas_validas(grupo, x)
    return ElementoGrupo(tuple(((n + 1) // 2 * c) % n for c, n in zip(cx, grupo.ordens)))
