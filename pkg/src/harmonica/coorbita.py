"""Transformada wavelet sobre ``Ξ``, projeção reprodutora e normas de co-órbita."""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from typing import Dict, Optional, Sequence, Tuple

import numpy as np
from scipy import linalg

from .bochner_wiener import TOLERANCIA_POSTO, matriz_aniquilador_operadores, relatorio_wiener
from .convolucao import FuncaoFase, convolucao_ab, norma_lp, norma_schatten
from .representacao import Operador, Representacao

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class Janela:
    """Vetor unitário ``φ0`` com ``R φ0 = φ0``."""

    vetor: np.ndarray


def criar_janela(rep: Representacao, vetor, tol: float = 1e-9) -> Janela:
    vetor = np.array(vetor, dtype=complex).reshape(-1)
    if vetor.shape != (rep.dim,):
        raise ValueError(f"Janela com {vetor.size} entradas; N = {rep.dim}")
    if abs(np.linalg.norm(vetor) - 1) > tol:
        raise ValueError(f"A janela deve ter norma 1; recebida {np.linalg.norm(vetor):.6g}")
    if np.max(np.abs(rep.paridade @ vetor - vetor)) > tol:
        raise ValueError("A janela deve ser par: R φ0 = φ0")
    vetor.setflags(write=False)
    return Janela(vetor)


def janela_padrao(rep: Representacao) -> Janela:
    """``e_0``, a indicadora da origem de ``G``."""

    vetor = np.zeros(rep.dim, dtype=complex)
    vetor[0] = 1
    return criar_janela(rep, vetor)


def _vetor(rep: Representacao, f) -> np.ndarray:
    f = np.asarray(f, dtype=complex).reshape(-1)
    if f.shape != (rep.dim,):
        raise ValueError(f"Vetor com {f.size} entradas; N = {rep.dim}")
    return f


def _orbita(rep: Representacao, janela: Janela) -> np.ndarray:
    """Linhas ``U_x φ0``."""

    return rep.unitarios @ janela.vetor


def transformada_wavelet(rep: Representacao, f, janela: Optional[Janela] = None) -> FuncaoFase:
    """``W_{φ0} f(x) = ⟨f, U_x φ0⟩``."""

    janela = janela or janela_padrao(rep)
    return FuncaoFase(rep.espaco, _orbita(rep, janela).conj() @ _vetor(rep, f))


def adjunta_wavelet(rep: Representacao, g: FuncaoFase, janela: Optional[Janela] = None) -> np.ndarray:
    """``W* g = w Σ_x g(x) U_x φ0``; ``W* W`` é a identidade."""

    janela = janela or janela_padrao(rep)
    return rep.espaco.peso * (g.valores @ _orbita(rep, janela))


def nucleo_reprodutor(rep: Representacao, janela: Optional[Janela] = None) -> np.ndarray:
    """``K[x, y] = W(φ0)(x − y) m(y, −y) / m(−y, x)``."""

    janela = janela or janela_padrao(rep)
    espaco = rep.espaco
    matriz_m = espaco.matriz_multiplicador
    negativo = espaco.negativo
    indices = np.arange(espaco.num_pontos)
    w_janela = transformada_wavelet(rep, janela.vetor, janela).valores
    fator = matriz_m[indices, negativo][None, :] / matriz_m[negativo[None, :], indices[:, None]]
    return w_janela[espaco.diferenca] * fator


def projecao_reprodutora(rep: Representacao, g: FuncaoFase, janela: Optional[Janela] = None) -> FuncaoFase:
    """``P g = w Σ_y g(y) K[·, y]``, a projeção ortogonal sobre a imagem de ``W``."""

    return FuncaoFase(rep.espaco, rep.espaco.peso * (nucleo_reprodutor(rep, janela) @ g.valores))


def norma_coorbita(rep: Representacao, f, p: float, janela: Optional[Janela] = None) -> float:
    """``‖f‖_{p, φ0} = ‖W_{φ0} f‖_{L^p(Ξ)}``."""

    return norma_lp(transformada_wavelet(rep, f, janela), p)


def verificar_cadeia_coorbita(
    rep: Representacao, f, janela: Optional[Janela] = None, tol: float = 1e-9
) -> Tuple[Tuple[float, float, float], bool]:
    """``‖f‖_{∞,φ0} ≤ ‖f‖ ≤ ‖f‖_{1,φ0}``, com ``‖f‖_{2,φ0} = ‖f‖``."""

    infinito = norma_coorbita(rep, f, math.inf, janela)
    hilbert = norma_coorbita(rep, f, 2, janela)
    um = norma_coorbita(rep, f, 1, janela)
    escala = max(1.0, um)
    norma = float(np.linalg.norm(_vetor(rep, f)))
    valida = infinito <= hilbert + tol * escala and hilbert <= um + tol * escala
    valida = valida and abs(hilbert - norma) <= tol * escala
    return (infinito, hilbert, um), valida


def constantes_equivalencia(
    rep: Representacao,
    janela_a: Janela,
    janela_b: Janela,
    p: float,
    rng: np.random.Generator,
    amostras: int = 100,
) -> Tuple[float, float]:
    """Menor e maior razão ``‖f‖_{p,b} / ‖f‖_{p,a}`` observadas."""

    from .amostras import vetor_aleatorio

    razoes = []
    for _ in range(amostras):
        f = vetor_aleatorio(rng, rep.dim)
        razoes.append(norma_coorbita(rep, f, p, janela_b) / norma_coorbita(rep, f, p, janela_a))
    return float(min(razoes)), float(max(razoes))


def constante_convolucao_l1(rep: Representacao, rng: np.random.Generator, amostras: int = 100) -> float:
    """Maior ``‖A ∗ B‖_{L¹} / (‖A‖_{T¹} ‖B‖_{T¹})`` observado; nunca excede 1."""

    from .amostras import operador_aleatorio

    maior = 0.0
    for _ in range(amostras):
        A = operador_aleatorio(rng, rep.dim)
        B = operador_aleatorio(rng, rep.dim)
        razao = norma_lp(convolucao_ab(rep, A, B), 1) / (norma_schatten(A, 1) * norma_schatten(B, 1))
        maior = max(maior, razao)
    return float(maior)


@dataclass
class RelatorioCoorbita:
    desvio_isometria: float
    desvio_idempotencia: float
    desvio_nucleo: float
    desvio_hilbert: float
    cadeia_valida: bool
    tol: float = 1e-9

    @property
    def aprovado(self) -> bool:
        return self.cadeia_valida and max(
            self.desvio_isometria, self.desvio_idempotencia, self.desvio_nucleo, self.desvio_hilbert
        ) <= self.tol

    def como_dicionario(self) -> dict:
        return {
            "desvio_isometria": self.desvio_isometria,
            "desvio_idempotencia": self.desvio_idempotencia,
            "desvio_nucleo": self.desvio_nucleo,
            "desvio_hilbert": self.desvio_hilbert,
            "cadeia_valida": self.cadeia_valida,
            "aprovado": self.aprovado,
        }


def verificar_coorbita(
    rep: Representacao,
    rng: np.random.Generator,
    janela: Optional[Janela] = None,
    tentativas: int = 50,
    tol: float = 1e-9,
) -> RelatorioCoorbita:
    """``W* W = I``, ``P² = P``, ``P = W W*`` e ``‖·‖_{2,φ0} = ‖·‖``."""

    from .amostras import funcao_aleatoria, vetor_aleatorio

    janela = janela or janela_padrao(rep)
    isometria = idempotencia = nucleo = hilbert = 0.0
    cadeia = True
    for _ in range(tentativas):
        f = vetor_aleatorio(rng, rep.dim)
        Wf = transformada_wavelet(rep, f, janela)
        isometria = max(isometria, float(np.max(np.abs(adjunta_wavelet(rep, Wf, janela) - f))))

        g = funcao_aleatoria(rng, rep.espaco)
        Pg = projecao_reprodutora(rep, g, janela)
        idempotencia = max(
            idempotencia, float(np.max(np.abs(projecao_reprodutora(rep, Pg, janela).valores - Pg.valores)))
        )
        via_adjunta = transformada_wavelet(rep, adjunta_wavelet(rep, g, janela), janela)
        nucleo = max(nucleo, float(np.max(np.abs(via_adjunta.valores - Pg.valores))))

        (_, norma2, _), valida = verificar_cadeia_coorbita(rep, f, janela, tol)
        hilbert = max(hilbert, abs(norma2 - float(np.linalg.norm(f))))
        cadeia = cadeia and valida
    return RelatorioCoorbita(isometria, idempotencia, nucleo, hilbert, cadeia, tol)


def norma_coorbita_operador(rep: Representacao, B: Operador, p: float, janela: Optional[Janela] = None) -> float:
    """Norma ``L^p(Ξ × Ξ)`` do núcleo ``K(x, y) = ⟨B U_y φ0, U_x φ0⟩``; em ``p = 2`` é a de Hilbert–Schmidt."""

    if B.dim != rep.dim:
        raise ValueError(f"Operador de dimensão {B.dim} incompatível com N = {rep.dim}")
    janela = janela or janela_padrao(rep)
    orbita = _orbita(rep, janela)
    nucleo = orbita.conj() @ B.matriz @ orbita.T
    return _norma_atomica(nucleo, rep.espaco.peso ** 2, p)


def _norma_atomica(valores: np.ndarray, massa: float, p: float) -> float:
    modulo = np.abs(valores)
    if math.isinf(p):
        return float(modulo.max(initial=0.0))
    return float((massa * np.sum(modulo ** p)) ** (1.0 / p))


def _extremos_razao(massa_atomo: float, massa_total: float, p: float) -> Tuple[float, float]:
    """Menor e maior ``‖g‖_p / ‖g‖_2`` numa medida de átomos de massa ``massa_atomo``."""

    expoente = (0.0 if math.isinf(p) else 1.0 / p) - 0.5
    extremos = (massa_atomo ** expoente, massa_total ** expoente)
    return min(extremos), max(extremos)


@dataclass
class RelatorioIndependenciaP:
    """Veredictos de regularidade decididos pela constante de injetividade em cada ``p``.

    ``cotas_inferiores[p]`` é um limite garantido de ``inf ‖A ∗ B‖_{L^p} / ‖B‖_{p,φ0}``;
    ``cotas_superiores[p]`` é o menor valor da razão observado nos vetores singulares.
    """

    regular_base: bool
    veredictos: Dict[float, bool] = field(default_factory=dict)
    cotas_inferiores: Dict[float, float] = field(default_factory=dict)
    cotas_superiores: Dict[float, float] = field(default_factory=dict)
    cotas_validas: Dict[float, bool] = field(default_factory=dict)

    @property
    def identicos(self) -> bool:
        return all(v == self.regular_base for v in self.veredictos.values())

    @property
    def aprovado(self) -> bool:
        return self.identicos and all(self.cotas_validas.values())

    def como_dicionario(self) -> dict:
        return {
            "regular_base": self.regular_base,
            "veredictos": {str(p): v for p, v in self.veredictos.items()},
            "cotas_inferiores": {str(p): v for p, v in self.cotas_inferiores.items()},
            "cotas_superiores": {str(p): v for p, v in self.cotas_superiores.items()},
            "cotas_validas": {str(p): v for p, v in self.cotas_validas.items()},
            "identicos": self.identicos,
            "aprovado": self.aprovado,
        }


def independencia_p_wiener(
    rep: Representacao,
    familia: Sequence[Operador],
    expoentes: Sequence[float],
    janela: Optional[Janela] = None,
) -> RelatorioIndependenciaP:
    """Decide a regularidade de ``S`` em cada ``Co_p`` e compara com o veredicto de Wiener.

    Para ``T: B ↦ (A ∗ B)_{A ∈ S}`` a constante ``inf ‖T B‖_{L^p} / ‖B‖_{p,φ0}`` é
    cercada por baixo com ``σ_min(T)`` e as constantes de comparação entre ``L^p`` e
    ``L²`` das duas medidas, e por cima avaliando a razão nos vetores singulares
    de ``T``. ``S`` é regular em ``Co_p`` quando a cota inferior supera
    ``TOLERANCIA_POSTO`` vezes a razão no maior vetor singular.
    """

    if not familia:
        raise ValueError("A família não pode ser vazia")
    janela = janela or janela_padrao(rep)
    base = relatorio_wiener(rep, familia)
    espaco = rep.espaco
    n = rep.dim
    peso = espaco.peso
    mapa = math.sqrt(peso) * matriz_aniquilador_operadores(rep, familia)
    _, singulares, direitos = linalg.svd(mapa, full_matrices=False)
    candidatos = [Operador(v.reshape(n, n)) for v in direitos.conj()]
    imagens = [mapa @ v / math.sqrt(peso) for v in direitos.conj()]

    relatorio = RelatorioIndependenciaP(base.regular)
    for p in expoentes:
        p = float(p)
        if not 1 < p < math.inf:
            raise ValueError(f"Expoente p = {p} inválido: exige-se 1 < p < ∞")
        menor_saida, _ = _extremos_razao(peso, peso * mapa.shape[0], p)
        _, maior_entrada = _extremos_razao(peso ** 2, float(n ** 2), p)
        razoes = np.array(
            [
                _norma_atomica(imagem, peso, p) / norma_coorbita_operador(rep, B, p, janela)
                for imagem, B in zip(imagens, candidatos)
            ]
        )
        inferior = float(singulares[-1]) * menor_saida / maior_entrada
        escala = float(razoes[0])
        relatorio.cotas_inferiores[p] = inferior
        relatorio.cotas_superiores[p] = float(razoes.min())
        relatorio.cotas_validas[p] = inferior <= razoes.min() + 1e-9 * escala
        relatorio.veredictos[p] = inferior > TOLERANCIA_POSTO * escala
    if not relatorio.identicos:
        logger.warning("Veredictos de Wiener dependem de p: %s", relatorio.veredictos)
    return relatorio
