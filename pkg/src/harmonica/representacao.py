"""Representação projetiva de Schrödinger, operador de paridade e ação por deslocamentos."""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from .espaco_fase import EspacoFase, PontoFase, PontoLike
from .grupo import TOLERANCIA_PADRAO, tabela_caracteres

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class Operador:
    """Operador linear em ``H = L²(G)`` na base canônica ``{e_y}``."""

    matriz: np.ndarray

    def __post_init__(self) -> None:
        matriz = np.array(self.matriz, dtype=complex)
        if matriz.ndim != 2 or matriz.shape[0] != matriz.shape[1]:
            raise ValueError(f"Operador deve ser uma matriz quadrada; recebida forma {matriz.shape}")
        if not np.all(np.isfinite(matriz)):
            raise ValueError("Operador contém entradas não finitas")
        matriz.setflags(write=False)
        object.__setattr__(self, "matriz", matriz)

    @classmethod
    def identidade(cls, dim: int) -> "Operador":
        return cls(np.eye(dim))

    @classmethod
    def zero(cls, dim: int) -> "Operador":
        return cls(np.zeros((dim, dim)))

    @classmethod
    def posto_um(cls, phi, psi=None) -> "Operador":
        """``φ ⊗ ψ = φ ψ^H``; com ``psi`` omitido, o projetor sobre ``φ``."""

        phi = np.asarray(phi, dtype=complex)
        psi = phi if psi is None else np.asarray(psi, dtype=complex)
        return cls(np.outer(phi, psi.conj()))

    @property
    def dim(self) -> int:
        return self.matriz.shape[0]

    def adjunto(self) -> "Operador":
        return Operador(self.matriz.conj().T)

    def traco(self) -> complex:
        return complex(np.trace(self.matriz))

    def eh_hermitiano(self, tol: float = 1e-9) -> bool:
        return bool(np.max(np.abs(self.matriz - self.matriz.conj().T)) <= tol)

    def menor_autovalor(self) -> float:
        """Menor autovalor da parte hermitiana."""

        hermitiana = (self.matriz + self.matriz.conj().T) / 2
        return float(np.linalg.eigvalsh(hermitiana)[0])

    def _outro(self, outro: "Operador") -> np.ndarray:
        if not isinstance(outro, Operador):
            return NotImplemented
        if outro.dim != self.dim:
            raise ValueError(f"Dimensões incompatíveis: {self.dim} e {outro.dim}")
        return outro.matriz

    def __add__(self, outro):
        matriz = self._outro(outro)
        if matriz is NotImplemented:
            return NotImplemented
        return Operador(self.matriz + matriz)

    def __sub__(self, outro):
        matriz = self._outro(outro)
        if matriz is NotImplemented:
            return NotImplemented
        return Operador(self.matriz - matriz)

    def __neg__(self):
        return Operador(-self.matriz)

    def __mul__(self, escalar):
        if isinstance(escalar, Operador):
            return NotImplemented
        return Operador(self.matriz * complex(escalar))

    __rmul__ = __mul__

    def __truediv__(self, escalar):
        return Operador(self.matriz / complex(escalar))

    def __matmul__(self, outro):
        matriz = self._outro(outro)
        if matriz is NotImplemented:
            return NotImplemented
        return Operador(self.matriz @ matriz)


@dataclass(frozen=True, eq=False)
class Representacao:
    """Família ``{U_z}`` de unitários com ``U_z U_w = m(z, w) U_{z+w}`` e paridade ``R``."""

    espaco: EspacoFase
    unitarios: np.ndarray
    paridade: np.ndarray

    @property
    def dim(self) -> int:
        return self.espaco.grupo.tamanho

    @property
    def R(self) -> Operador:
        return Operador(self.paridade)

    def U(self, ponto: PontoLike) -> Operador:
        return Operador(self.unitarios[self.espaco.indice(ponto)])


def construir_representacao(espaco: EspacoFase, tol: float = TOLERANCIA_PADRAO) -> Representacao:
    """Constrói ``(U_{(x,ξ)} f)(y) = a(x, ξ) ⟨y, ξ⟩ f(y − x)``.

    ``a`` é a fase do multiplicador relativa ao canônico; multiplicadores
    tabelados não são construtivos e geram ``ValueError``.
    """

    grupo = espaco.grupo
    n = grupo.tamanho
    fase = espaco.multiplicador.fase_canonica()
    caracteres = tabela_caracteres(grupo)
    coords = grupo.coordenadas
    linhas = np.arange(n)

    unitarios = np.zeros((espaco.num_pontos, n, n), dtype=complex)
    for ix in range(n):
        colunas = grupo.indices(coords - coords[ix])
        bloco = slice(ix * n, (ix + 1) * n)
        # U[ix·N + iξ][y, y − x] = a · ⟨y, ξ⟩
        unitarios[np.arange(ix * n, (ix + 1) * n)[:, None], linhas[None, :], colunas[None, :]] = (
            caracteres.T * fase[bloco][:, None]
        )

    paridade = np.zeros((n, n), dtype=complex)
    paridade[linhas, grupo.indices(-coords)] = 1
    quadrado = paridade @ paridade
    c = quadrado[0, 0]
    if np.max(np.abs(quadrado - c * np.eye(n))) > tol or abs(c) <= tol:
        raise ValueError("A paridade não satisfaz R² = c·I")
    # ramo principal da raiz quadrada
    paridade = paridade / np.sqrt(c)

    unitarios.setflags(write=False)
    paridade.setflags(write=False)
    logger.debug("Representação construída sobre %s (%s), dim=%d", grupo, espaco.multiplicador.tipo, n)
    return Representacao(espaco, unitarios, paridade)


def deslocar(rep: Representacao, ponto: PontoLike, A: Operador) -> Operador:
    """``α_z(A) = U_z A U_z*``."""

    U = rep.unitarios[rep.espaco.indice(ponto)]
    return Operador(U @ A.matriz @ U.conj().T)


def deslocamentos(rep: Representacao, A: Operador) -> np.ndarray:
    """Todos os ``α_z(A)`` empilhados em um arranjo ``|Ξ| × N × N``."""

    _verificar_dimensao(rep, A)
    return rep.unitarios @ A.matriz @ rep.unitarios.conj().transpose(0, 2, 1)


def refletir(rep: Representacao, A: Operador) -> Operador:
    """``β(A) = R A R*``."""

    _verificar_dimensao(rep, A)
    return Operador(rep.paridade @ A.matriz @ rep.paridade.conj().T)


def _verificar_dimensao(rep: Representacao, A: Operador) -> None:
    if A.dim != rep.dim:
        raise ValueError(f"Operador de dimensão {A.dim} incompatível com N = {rep.dim}")


def desvio_unitariedade(rep: Representacao) -> float:
    identidade = np.eye(rep.dim)
    produtos = rep.unitarios @ rep.unitarios.conj().transpose(0, 2, 1)
    return float(np.max(np.abs(produtos - identidade)))


def desvio_ccr(rep: Representacao) -> float:
    """Maior ``‖U_z U_w − m(z, w) U_{z+w}‖`` entrada a entrada."""

    espaco = rep.espaco
    matriz = espaco.matriz_multiplicador
    desvio = 0.0
    for z in range(espaco.num_pontos):
        produtos = rep.unitarios[z] @ rep.unitarios
        alvo = matriz[z][:, None, None] * rep.unitarios[espaco.tabela_soma[z]]
        desvio = max(desvio, float(np.max(np.abs(produtos - alvo))))
    return desvio


def desvio_paridade(rep: Representacao) -> float:
    """``U_z R = R U_{−z}``, ``R = R*`` e ``R² = I``."""

    R = rep.paridade
    comutacao = rep.unitarios @ R - R @ rep.unitarios[rep.espaco.negativo]
    return float(
        max(
            np.max(np.abs(comutacao)),
            np.max(np.abs(R - R.conj().T)),
            np.max(np.abs(R @ R - np.eye(rep.dim))),
        )
    )


def posto_irredutibilidade(rep: Representacao) -> int:
    """Posto de ``span{U_z}``; vale ``N²`` quando a representação é irredutível."""

    return int(np.linalg.matrix_rank(rep.unitarios.reshape(rep.espaco.num_pontos, -1)))


@dataclass
class RelatorioMoyal:
    tentativas: int
    desvio_maximo: float
    aprovado: bool


def verificar_moyal(
    rep: Representacao,
    rng: np.random.Generator,
    tentativas: int = 100,
    tol: float = 1e-9,
) -> RelatorioMoyal:
    """``w Σ_z ⟨φ1, U_z ψ1⟩ conj⟨φ2, U_z ψ2⟩ = ⟨φ1, φ2⟩ conj⟨ψ1, ψ2⟩``."""

    from .amostras import vetor_aleatorio

    n = rep.dim
    peso = rep.espaco.peso
    desvio = 0.0
    for _ in range(tentativas):
        phi1, psi1, phi2, psi2 = (vetor_aleatorio(rng, n) for _ in range(4))
        # ⟨u, v⟩ = Σ u conj(v)
        coef1 = (rep.unitarios @ psi1) @ phi1.conj()
        coef2 = (rep.unitarios @ psi2) @ phi2.conj()
        esquerda = peso * np.sum(coef1.conj() * coef2)
        direita = np.vdot(phi2, phi1) * np.vdot(psi2, psi1).conj()
        escala = max(1.0, abs(direita))
        desvio = max(desvio, abs(esquerda - direita) / escala)
    return RelatorioMoyal(tentativas, float(desvio), desvio <= tol)


def decompor_covariante(
    rep: Representacao, A: Operador, tol: float = 1e-9
) -> Optional[Tuple[complex, PontoFase]]:
    """Decompõe ``A = b·U_z`` quando ``α_x(A) = c_x·A`` para todo ``x``; senão ``None``.

    ``c_x = tr(α_x(A) A*) / tr(A A*)`` e ``z`` é o ponto com ``c_x = σ(x, z)``.
    """

    matriz = A.matriz
    norma2 = float(np.vdot(matriz, matriz).real)
    if norma2 <= tol ** 2:
        raise ValueError("O operador nulo não admite decomposição covariante")
    desl = deslocamentos(rep, A)
    c = np.einsum("xij,ij->x", desl, matriz.conj()) / norma2
    residuo = np.linalg.norm(desl - c[:, None, None] * matriz, axis=(1, 2)) / np.sqrt(norma2)
    if np.max(residuo) > tol:
        return None
    sigma = rep.espaco.sigma
    erros = np.max(np.abs(sigma - c[:, None]), axis=0)
    z = int(np.argmin(erros))
    if erros[z] > tol:
        return None
    b = complex(np.vdot(rep.unitarios[z], matriz) / rep.dim)
    if np.linalg.norm(matriz - b * rep.unitarios[z]) > tol * np.sqrt(norma2):
        return None
    return b, rep.espaco.ponto(z)
