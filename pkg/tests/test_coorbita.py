"""Testes da transformada wavelet e das normas de co-órbita."""
import math

import numpy as np
import pytest

from harmonica.amostras import criar_gerador, janela_simetrica_aleatoria, operador_aleatorio, vetor_aleatorio
from harmonica.convolucao import FuncaoFase
from harmonica.coorbita import (
    adjunta_wavelet,
    constante_convolucao_l1,
    constantes_equivalencia,
    criar_janela,
    independencia_p_wiener,
    janela_padrao,
    norma_coorbita,
    norma_coorbita_operador,
    nucleo_reprodutor,
    projecao_reprodutora,
    transformada_wavelet,
    verificar_cadeia_coorbita,
    verificar_coorbita,
)
from harmonica.espaco_fase import criar_espaco_fase
from harmonica.grupo import criar_grupo
from harmonica.representacao import Operador, construir_representacao


def _rep(ordens, tipo="canonical"):
    return construir_representacao(criar_espaco_fase(criar_grupo(ordens), tipo))


@pytest.fixture(params=[([2], "canonical"), ([4], "canonical"), ([2, 3], "canonical"), ([3], "weyl")])
def rep(request):
    return _rep(*request.param)


def test_relatorio_de_coorbita(rep) -> None:
    relatorio = verificar_coorbita(rep, criar_gerador(1), tentativas=10)

    assert relatorio.aprovado
    assert relatorio.como_dicionario()["cadeia_valida"]


def test_relatorio_com_janela_simetrica(rep) -> None:
    rng = criar_gerador(2)
    janela = criar_janela(rep, janela_simetrica_aleatoria(rng, rep.paridade))

    assert verificar_coorbita(rep, rng, janela, tentativas=5).aprovado


def test_isometria_e_nucleo(rep) -> None:
    rng = criar_gerador(3)
    f = vetor_aleatorio(rng, rep.dim)

    np.testing.assert_allclose(adjunta_wavelet(rep, transformada_wavelet(rep, f)), f, atol=1e-10)
    nucleo = nucleo_reprodutor(rep)
    # K[x, x] = ‖φ0‖² = 1
    np.testing.assert_allclose(np.diag(nucleo), 1, atol=1e-12)


def test_projecao_fixa_a_imagem_de_w(rep) -> None:
    f = vetor_aleatorio(criar_gerador(4), rep.dim)
    Wf = transformada_wavelet(rep, f)

    np.testing.assert_allclose(projecao_reprodutora(rep, Wf).valores, Wf.valores, atol=1e-10)


@pytest.mark.parametrize("p", [1.0, 1.5, 2.0, 3.0, math.inf])
def test_janela_padrao_reproduz_a_norma_lp_de_g(p) -> None:
    rep = _rep([2, 3])
    f = vetor_aleatorio(criar_gerador(5), rep.dim)
    esperado = np.abs(f).max() if math.isinf(p) else np.sum(np.abs(f) ** p) ** (1 / p)

    assert norma_coorbita(rep, f, p) == pytest.approx(esperado)


def test_cadeia_de_normas(rep) -> None:
    f = vetor_aleatorio(criar_gerador(6), rep.dim)
    (infinito, hilbert, um), valida = verificar_cadeia_coorbita(rep, f)

    assert valida
    assert infinito <= hilbert <= um + 1e-12
    assert hilbert == pytest.approx(np.linalg.norm(f))


def test_validacao_da_janela() -> None:
    rep = _rep([4])

    with pytest.raises(ValueError, match="norma 1"):
        criar_janela(rep, [2, 0, 0, 0])
    with pytest.raises(ValueError, match="par"):
        criar_janela(rep, [0, 1, 0, 0])
    with pytest.raises(ValueError, match="entradas"):
        criar_janela(rep, [1, 0])
    janela = criar_janela(rep, np.array([0, 1, 0, 1]) / np.sqrt(2))
    assert janela.vetor[1] == pytest.approx(1 / np.sqrt(2))


def test_constantes_de_equivalencia() -> None:
    rep = _rep([4])
    rng = criar_gerador(7)
    padrao = janela_padrao(rep)
    outra = criar_janela(rep, janela_simetrica_aleatoria(rng, rep.paridade))

    assert constantes_equivalencia(rep, padrao, padrao, 3.0, rng, amostras=5) == pytest.approx((1.0, 1.0))
    menor, maior = constantes_equivalencia(rep, padrao, outra, 3.0, rng, amostras=20)
    assert 0 < menor <= maior < math.inf


def test_constante_de_convolucao_l1(rep) -> None:
    assert constante_convolucao_l1(rep, criar_gerador(8), amostras=20) <= 1 + 1e-9


def test_independencia_de_p(rep) -> None:
    rng = criar_gerador(9)
    familia = [operador_aleatorio(rng, rep.dim)]

    relatorio = independencia_p_wiener(rep, familia, [1.5, 2.0, 4.0])
    assert relatorio.regular_base
    assert relatorio.identicos
    assert relatorio.aprovado

    singular = independencia_p_wiener(rep, [Operador.identidade(rep.dim)], [1.5, 2.0, 4.0])
    assert not singular.regular_base
    assert singular.identicos
    assert singular.como_dicionario()["veredictos"] == {"1.5": False, "2.0": False, "4.0": False}


def _janela_uniforme(rep):
    return criar_janela(rep, np.ones(rep.dim) / math.sqrt(rep.dim))


def test_norma_de_operador_depende_da_janela() -> None:
    rep = _rep([3])
    E00 = Operador(np.diag([1.0, 0.0, 0.0]))
    uniforme = _janela_uniforme(rep)

    for p in (1.5, 2.0, 3.0):
        assert norma_coorbita_operador(rep, E00, p) == pytest.approx(1.0)
        assert norma_coorbita_operador(rep, E00, p, uniforme) == pytest.approx(3 ** (2 / p - 1))
    A = operador_aleatorio(criar_gerador(12), 3)
    assert norma_coorbita_operador(rep, A, 2, uniforme) == pytest.approx(np.linalg.norm(A.matriz))


def test_independencia_de_p_com_janela_uniforme() -> None:
    rep = _rep([3])
    familia = [operador_aleatorio(criar_gerador(13), rep.dim)]

    relatorio = independencia_p_wiener(rep, familia, [1.5, 2.0, 3.0], janela=_janela_uniforme(rep))

    assert relatorio.aprovado
    assert all(relatorio.veredictos.values())
    assert relatorio.cotas_inferiores[2.0] == pytest.approx(relatorio.cotas_superiores[2.0])
    assert relatorio.cotas_inferiores[1.5] < relatorio.cotas_inferiores[2.0]
    assert relatorio.cotas_inferiores[3.0] < relatorio.cotas_inferiores[2.0]
    for p in (1.5, 3.0):
        assert 0 < relatorio.cotas_inferiores[p] <= relatorio.cotas_superiores[p] * (1 + 1e-9)


def test_independencia_de_p_rejeita_entradas_invalidas() -> None:
    rep = _rep([2])

    with pytest.raises(ValueError, match="1 < p < ∞"):
        independencia_p_wiener(rep, [Operador.identidade(2)], [1.0])
    with pytest.raises(ValueError, match="vazia"):
        independencia_p_wiener(rep, [], [2.0])


def test_adjunta_rejeita_vetor_de_tamanho_errado() -> None:
    rep = _rep([3])

    with pytest.raises(ValueError, match="entradas"):
        transformada_wavelet(rep, np.ones(2))
    assert adjunta_wavelet(rep, FuncaoFase.constante(rep.espaco, 0)).shape == (3,)
