"""Espaço de fase ``Ξ = G × Ĝ``, multiplicadores de Heisenberg e forma simplética."""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import ClassVar, List, Sequence, Union

import numpy as np

from .grupo import (
    TOLERANCIA_PADRAO,
    ElementoGrupo,
    GrupoAbeliano,
    fracao_caractere,
)

logger = logging.getLogger(__name__)

# Maior |Ξ| aceito pelas verificações exaustivas de cociclo.
LIMITE_PONTOS_COCICLO = 4096


@dataclass(frozen=True)
class PontoFase:
    """Ponto ``(x, ξ)`` do espaço de fase."""

    pos: ElementoGrupo
    mom: ElementoGrupo


def grupo_fase(grupo: GrupoAbeliano) -> GrupoAbeliano:
    """``G × Ĝ`` visto como grupo; o índice de ``(x, ξ)`` é ``idx(x)·N + idx(ξ)``."""

    return GrupoAbeliano(grupo.ordens * 2)


@dataclass(frozen=True, eq=False)
class Multiplicador:
    """Multiplicador de Heisenberg ``m: Ξ × Ξ → T`` avaliado sobre índices canônicos."""

    grupo: GrupoAbeliano
    tipo: ClassVar[str] = "abstrato"

    @cached_property
    def grupo_fase(self) -> GrupoAbeliano:
        return grupo_fase(self.grupo)

    @property
    def num_pontos(self) -> int:
        return self.grupo.tamanho ** 2

    def _partes(self, i: np.ndarray, j: np.ndarray):
        coords = self.grupo_fase.coordenadas
        k = self.grupo.posto
        cz, cw = coords[i], coords[j]
        return cz[..., :k], cz[..., k:], cw[..., :k], cw[..., k:]

    def avaliar(self, i, j) -> np.ndarray:
        raise NotImplementedError

    def matriz(self) -> np.ndarray:
        indices = np.arange(self.num_pontos)
        return np.asarray(self.avaliar(indices[:, None], indices[None, :]), dtype=complex)

    def fase_canonica(self) -> np.ndarray:
        """Fase ``a`` com ``U^m = a · U^canônico``; só existe para tipos construtivos."""

        raise ValueError(
            f"O multiplicador do tipo '{self.tipo}' não define uma representação construtiva"
        )

    def __call__(self, z: int, w: int) -> complex:
        return complex(self.avaliar(np.asarray(z), np.asarray(w)))


@dataclass(frozen=True, eq=False)
class MultiplicadorCanonico(Multiplicador):
    """``m((x, ξ), (y, η)) = conj⟨x, η⟩``."""

    tipo: ClassVar[str] = "canonical"

    def avaliar(self, i, j) -> np.ndarray:
        x, _, _, eta = self._partes(np.asarray(i), np.asarray(j))
        return np.exp(-2j * np.pi * fracao_caractere(x, eta, self.grupo.vetor_ordens))

    def fase_canonica(self) -> np.ndarray:
        return np.ones(self.num_pontos, dtype=complex)


@dataclass(frozen=True, eq=False)
class MultiplicadorWeyl(Multiplicador):
    """Multiplicador simétrico de Weyl, definido apenas para grupos 2-regulares.

    Forma fechada: ``m((x, ξ), (y, η)) = exp(2πi Σ_j h_j (y_j ξ_j − x_j η_j) / n_j)``
    com ``h_j = (n_j + 1) / 2``, o inverso de 2 em ``Z_{n_j}``.
    """

    tipo: ClassVar[str] = "weyl"

    def __post_init__(self) -> None:
        if any(n % 2 == 0 for n in self.grupo.ordens):
            raise ValueError(
                f"O multiplicador de Weyl exige um grupo 2-regular (ordens ímpares); recebido {self.grupo}"
            )

    @cached_property
    def meios(self) -> np.ndarray:
        return (self.grupo.vetor_ordens + 1) // 2

    def avaliar(self, i, j) -> np.ndarray:
        x, xi, y, eta = self._partes(np.asarray(i), np.asarray(j))
        n = self.grupo.vetor_ordens
        fracao = (((self.meios * (y * xi - x * eta)) % n) / n).sum(axis=-1)
        return np.exp(2j * np.pi * fracao)

    def fase_canonica(self) -> np.ndarray:
        coords = self.grupo_fase.coordenadas
        k = self.grupo.posto
        x, xi = coords[:, :k], coords[:, k:]
        return np.exp(-2j * np.pi * fracao_caractere(self.meios * x, xi, self.grupo.vetor_ordens))


@dataclass(frozen=True, eq=False)
class MultiplicadorModificado(Multiplicador):
    """``m_a(z, w) = a(z) a(w) / a(z + w) · m(z, w)`` para uma fase par ``a``."""

    base: Multiplicador = field(default=None)
    fase: np.ndarray = field(default=None)
    tipo: ClassVar[str] = "modified"

    def avaliar(self, i, j) -> np.ndarray:
        i, j = np.asarray(i), np.asarray(j)
        coords = self.grupo_fase.coordenadas
        soma = self.grupo_fase.indices(coords[i] + coords[j])
        return self.fase[i] * self.fase[j] / self.fase[soma] * self.base.avaliar(i, j)

    def fase_canonica(self) -> np.ndarray:
        return self.base.fase_canonica() * self.fase


@dataclass(frozen=True, eq=False)
class MultiplicadorTabelado(Multiplicador):
    """Multiplicador dado por uma tabela explícita ``|Ξ| × |Ξ|`` (apenas validável)."""

    tabela: np.ndarray = field(default=None)
    tipo: ClassVar[str] = "table"

    def __post_init__(self) -> None:
        tabela = np.asarray(self.tabela, dtype=complex)
        esperado = (self.num_pontos, self.num_pontos)
        if tabela.shape != esperado:
            raise ValueError(f"Tabela de multiplicador com forma {tabela.shape}; esperado {esperado}")
        if not np.all(np.isfinite(tabela)):
            raise ValueError("Tabela de multiplicador contém valores não finitos")
        tabela.setflags(write=False)
        object.__setattr__(self, "tabela", tabela)

    def avaliar(self, i, j) -> np.ndarray:
        return self.tabela[np.asarray(i), np.asarray(j)]


def multiplicador_canonico(grupo: GrupoAbeliano) -> MultiplicadorCanonico:
    return MultiplicadorCanonico(grupo)


def multiplicador_weyl(grupo: GrupoAbeliano) -> MultiplicadorWeyl:
    return MultiplicadorWeyl(grupo)


def multiplicador_modificado(
    base: Multiplicador, fase: Sequence[complex], tol: float = 1e-9
) -> MultiplicadorModificado:
    """Modifica ``base`` por uma fase ``a: Ξ → T`` com ``a(0) = 1`` e ``a(−z) = a(z)``."""

    fase = np.asarray(fase, dtype=complex).reshape(-1)
    if fase.shape != (base.num_pontos,):
        raise ValueError(f"A fase deve ter {base.num_pontos} valores; recebidos {fase.size}")
    if not np.all(np.isfinite(fase)):
        raise ValueError("A fase contém valores não finitos")
    if np.max(np.abs(np.abs(fase) - 1)) > tol:
        raise ValueError("A fase deve ter módulo 1 em todos os pontos")
    if abs(fase[0] - 1) > tol:
        raise ValueError(f"A fase deve valer 1 na origem; recebido {fase[0]}")
    coords = base.grupo_fase.coordenadas
    negativo = base.grupo_fase.indices(-coords)
    if np.max(np.abs(fase - fase[negativo])) > tol:
        raise ValueError("A fase deve ser par: a(−z) = a(z)")
    fase.setflags(write=False)
    return MultiplicadorModificado(base.grupo, base=base, fase=fase)


def multiplicador_tabelado(grupo: GrupoAbeliano, tabela) -> MultiplicadorTabelado:
    return MultiplicadorTabelado(grupo, tabela=tabela)


@dataclass
class RelatorioMultiplicador:
    desvio_cociclo: float
    desvio_simetria: float
    desvio_normalizacao: float
    aprovado: bool

    @property
    def normalizado(self) -> bool:
        return self.aprovado

    def como_dicionario(self) -> dict:
        return {
            "desvio_cociclo": self.desvio_cociclo,
            "desvio_simetria": self.desvio_simetria,
            "desvio_normalizacao": self.desvio_normalizacao,
            "aprovado": self.aprovado,
        }


def _tabelas_soma_negativo(grupo_fase: GrupoAbeliano):
    coords = grupo_fase.coordenadas
    soma = grupo_fase.indices(coords[:, None, :] + coords[None, :, :])
    negativo = grupo_fase.indices(-coords)
    return soma, negativo


def verificar_multiplicador(
    m: Multiplicador,
    tol: float = TOLERANCIA_PADRAO,
    limite: int = LIMITE_PONTOS_COCICLO,
) -> RelatorioMultiplicador:
    """Confere cociclo, simetria ``m(−z, −w) = m(z, w)`` e normalização."""

    pontos = m.num_pontos
    if pontos > limite:
        raise ValueError(
            f"|Ξ| = {pontos} excede o limite de {limite} pontos para a verificação de cociclo"
        )
    matriz = m.matriz()
    soma, negativo = _tabelas_soma_negativo(m.grupo_fase)

    desvio_cociclo = 0.0
    for x in range(pontos):
        # m(x + y, z) m(x, y) = m(x, y + z) m(y, z), indexado por [y, z]
        esquerda = matriz[soma[x]] * matriz[x][:, None]
        direita = matriz[x][soma] * matriz
        desvio_cociclo = max(desvio_cociclo, float(np.max(np.abs(esquerda - direita))))

    desvio_simetria = float(np.max(np.abs(matriz - matriz[np.ix_(negativo, negativo)])))
    desvio_normalizacao = float(
        max(np.max(np.abs(matriz[0, :] - 1)), np.max(np.abs(matriz[:, 0] - 1)))
    )
    aprovado = max(desvio_cociclo, desvio_simetria, desvio_normalizacao) <= tol
    logger.debug(
        "Multiplicador %s sobre %s: cociclo=%.3e simetria=%.3e normalização=%.3e",
        m.tipo,
        m.grupo,
        desvio_cociclo,
        desvio_simetria,
        desvio_normalizacao,
    )
    return RelatorioMultiplicador(desvio_cociclo, desvio_simetria, desvio_normalizacao, aprovado)


def eh_bicaractere(m: Multiplicador, tol: float = 1e-9) -> bool:
    """Verdadeiro quando ``m`` é multiplicativo em cada argumento."""

    matriz = m.matriz()
    soma, _ = _tabelas_soma_negativo(m.grupo_fase)
    for x in range(m.num_pontos):
        # m(x, y + z) = m(x, y) m(x, z)
        if np.max(np.abs(matriz[x][soma] - matriz[x][:, None] * matriz[x][None, :])) > tol:
            return False
    return True


@dataclass(frozen=True, eq=False)
class FormaSimpletica:
    """``σ(z, w) = m(z, w) / m(w, z)``, ou uma tabela dada diretamente."""

    matriz: np.ndarray

    def __post_init__(self) -> None:
        matriz = np.asarray(self.matriz, dtype=complex)
        if matriz.ndim != 2 or matriz.shape[0] != matriz.shape[1]:
            raise ValueError(f"Forma simplética deve ser quadrada; recebida forma {matriz.shape}")
        matriz.setflags(write=False)
        object.__setattr__(self, "matriz", matriz)

    def __call__(self, z: int, w: int) -> complex:
        return complex(self.matriz[z, w])


def forma_simpletica(m: Multiplicador) -> FormaSimpletica:
    matriz = m.matriz()
    return FormaSimpletica(matriz / matriz.T)


@dataclass
class RelatorioFormaSimpletica:
    desvio_bicaractere: float
    desvio_antissimetria: float
    desvio_alternancia: float
    heisenberg: bool
    aprovado: bool


def verificar_forma_simpletica(
    sigma: FormaSimpletica, grupo_fase: GrupoAbeliano, tol: float = 1e-9
) -> RelatorioFormaSimpletica:
    """Bicaractere, ``σ(z, w) σ(w, z) = 1`` e ``σ(z, z) = 1``."""

    matriz = sigma.matriz
    if matriz.shape[0] != grupo_fase.tamanho:
        raise ValueError(
            f"Forma simplética de ordem {matriz.shape[0]} incompatível com |Ξ| = {grupo_fase.tamanho}"
        )
    soma, _ = _tabelas_soma_negativo(grupo_fase)
    desvio_bicaractere = 0.0
    for x in range(matriz.shape[0]):
        desvio = np.max(np.abs(matriz[x][soma] - matriz[x][:, None] * matriz[x][None, :]))
        desvio_bicaractere = max(desvio_bicaractere, float(desvio))
    desvio_antissimetria = float(np.max(np.abs(matriz * matriz.T - 1)))
    desvio_alternancia = float(np.max(np.abs(np.diag(matriz) - 1)))
    heisenberg = verificar_heisenberg(sigma, tol)
    aprovado = heisenberg and max(desvio_bicaractere, desvio_antissimetria, desvio_alternancia) <= tol
    return RelatorioFormaSimpletica(
        desvio_bicaractere, desvio_antissimetria, desvio_alternancia, heisenberg, aprovado
    )


def verificar_heisenberg(sigma: FormaSimpletica, tol: float = 1e-9) -> bool:
    """Não degenerescência: ``σ(x, ·) ≡ 1`` apenas para ``x = 0``."""

    matriz = sigma.matriz
    nucleo = np.flatnonzero(np.max(np.abs(matriz - 1), axis=1) <= tol)
    return nucleo.tolist() == [0]


PontoLike = Union[int, np.integer, PontoFase, Sequence[Sequence[int]]]


@dataclass(frozen=True, eq=False)
class EspacoFase:
    """``Ξ = G × Ĝ`` com medida de Haar ``1/N`` e um multiplicador fixo."""

    grupo: GrupoAbeliano
    multiplicador: Multiplicador

    def __post_init__(self) -> None:
        if self.multiplicador.grupo != self.grupo:
            raise ValueError(
                f"Multiplicador definido sobre {self.multiplicador.grupo}, não sobre {self.grupo}"
            )

    @property
    def peso_racional(self) -> Fraction:
        return Fraction(1, self.grupo.tamanho)

    @property
    def peso(self) -> float:
        return 1.0 / self.grupo.tamanho

    @property
    def num_pontos(self) -> int:
        return self.grupo.tamanho ** 2

    @cached_property
    def grupo_fase(self) -> GrupoAbeliano:
        return self.multiplicador.grupo_fase

    @cached_property
    def tabela_soma(self) -> np.ndarray:
        soma, _ = _tabelas_soma_negativo(self.grupo_fase)
        soma.setflags(write=False)
        return soma

    @cached_property
    def negativo(self) -> np.ndarray:
        negativo = self.grupo_fase.indices(-self.grupo_fase.coordenadas)
        negativo.setflags(write=False)
        return negativo

    @cached_property
    def diferenca(self) -> np.ndarray:
        """``diferenca[y, x]`` é o índice de ``y − x``."""

        diferenca = self.tabela_soma[:, self.negativo]
        diferenca.setflags(write=False)
        return diferenca

    @cached_property
    def matriz_multiplicador(self) -> np.ndarray:
        matriz = self.multiplicador.matriz()
        matriz.setflags(write=False)
        return matriz

    @cached_property
    def sigma(self) -> np.ndarray:
        matriz = self.matriz_multiplicador / self.matriz_multiplicador.T
        matriz.setflags(write=False)
        return matriz

    def compativel(self, outro: "EspacoFase") -> bool:
        return self is outro or (
            self.grupo == outro.grupo and self.multiplicador is outro.multiplicador
        )

    def indice(self, ponto: PontoLike) -> int:
        if isinstance(ponto, (int, np.integer)) and not isinstance(ponto, bool):
            if not 0 <= ponto < self.num_pontos:
                raise ValueError(f"Ponto {ponto} fora de [0, {self.num_pontos})")
            return int(ponto)
        if isinstance(ponto, PontoFase):
            pos, mom = ponto.pos, ponto.mom
        else:
            pos, mom = ponto
        return self.grupo.indice(pos) * self.grupo.tamanho + self.grupo.indice(mom)

    def ponto(self, indice: int) -> PontoFase:
        indice = self.indice(indice)
        n = self.grupo.tamanho
        return PontoFase(self.grupo.elemento(indice // n), self.grupo.elemento(indice % n))

    def pontos(self) -> List[PontoFase]:
        return [self.ponto(i) for i in range(self.num_pontos)]

    def metade(self, indice: int) -> int:
        """Índice de ``z/2`` em ``Ξ``; exige grupo 2-regular."""

        if any(n % 2 == 0 for n in self.grupo.ordens):
            raise ValueError(f"O grupo {self.grupo} não é 2-regular")
        coords = self.grupo_fase.coordenadas[self.indice(indice)]
        meios = (self.grupo_fase.vetor_ordens + 1) // 2
        return int(self.grupo_fase.indices(meios * coords))


_CONSTRUTORES = {
    "canonical": multiplicador_canonico,
    "weyl": multiplicador_weyl,
}


def criar_espaco_fase(
    grupo: GrupoAbeliano, multiplicador: Union[Multiplicador, str] = "canonical"
) -> EspacoFase:
    """Cria ``Ξ`` com um multiplicador dado ou pelo nome ``canonical``/``weyl``."""

    if isinstance(multiplicador, str):
        try:
            construtor = _CONSTRUTORES[multiplicador]
        except KeyError:
            raise ValueError(
                f"Tipo de multiplicador desconhecido: '{multiplicador}' "
                f"(use {', '.join(sorted(_CONSTRUTORES))} ou um JSON)"
            ) from None
        multiplicador = construtor(grupo)
    return EspacoFase(grupo, multiplicador)
