"""Testes das convoluções, normas e desigualdades de Young."""
import inspect
import math

import numpy as np
import pytest

from harmonica.amostras import criar_gerador, funcao_aleatoria, operador_aleatorio
from harmonica.convolucao import (
    ElementoMisto,
    FuncaoFase,
    combinacoes_young,
    convolucao_ab,
    convolucao_fa,
    convolucao_ff,
    deslocar_funcao,
    detectar_nao_positividade,
    identidade_convolucao,
    limite_convolucao_posto_um,
    norma_lp,
    norma_schatten,
    operador_multiplicacao,
    produto_banach,
    refletir_funcao,
    verificar_positividade,
    verificar_young,
)
from harmonica.espaco_fase import criar_espaco_fase
from harmonica.grupo import criar_grupo
from harmonica.representacao import Operador, construir_representacao, deslocar


def _rep(ordens, tipo="canonical"):
    return construir_representacao(criar_espaco_fase(criar_grupo(ordens), tipo))


@pytest.fixture(params=[([2], "canonical"), ([2, 3], "canonical"), ([3], "weyl")])
def rep(request):
    return _rep(*request.param)


def test_convolucao_com_a_constante_um_da_o_traco(rep) -> None:
    A = operador_aleatorio(criar_gerador(1), rep.dim)
    um = FuncaoFase.constante(rep.espaco, 1)

    np.testing.assert_allclose(convolucao_fa(rep, um, A).matriz, A.traco() * np.eye(rep.dim), atol=1e-10)


def test_unidade_da_convolucao(rep) -> None:
    rng = criar_gerador(2)
    f = funcao_aleatoria(rng, rep.espaco)
    A = operador_aleatorio(rng, rep.dim)
    delta = identidade_convolucao(rep.espaco)

    np.testing.assert_allclose(convolucao_ff(delta, f).valores, f.valores, atol=1e-10)
    np.testing.assert_allclose(convolucao_fa(rep, delta, A).matriz, A.matriz, atol=1e-10)


def test_um_convolvido_com_um(rep) -> None:
    um = FuncaoFase.constante(rep.espaco, 1)

    np.testing.assert_allclose(convolucao_ff(um, um).valores, rep.dim, atol=1e-10)


def test_identidade_convolvida_com_identidade(rep) -> None:
    identidade = Operador.identidade(rep.dim)

    np.testing.assert_allclose(convolucao_ab(rep, identidade, identidade).valores, rep.dim, atol=1e-10)


def test_integral_e_comutatividade_de_a_estrela_b(rep) -> None:
    rng = criar_gerador(4)
    A = operador_aleatorio(rng, rep.dim)
    B = operador_aleatorio(rng, rep.dim)
    AB = convolucao_ab(rep, A, B)

    assert rep.espaco.peso * AB.valores.sum() == pytest.approx(A.traco() * B.traco())
    np.testing.assert_allclose(AB.valores, convolucao_ab(rep, B, A).valores, atol=1e-10)


def test_covariancia_das_convolucoes(rep) -> None:
    rng = criar_gerador(5)
    f = funcao_aleatoria(rng, rep.espaco)
    A = operador_aleatorio(rng, rep.dim)
    B = operador_aleatorio(rng, rep.dim)
    x = rep.espaco.num_pontos - 1

    np.testing.assert_allclose(
        convolucao_fa(rep, deslocar_funcao(f, x), A).matriz,
        deslocar(rep, x, convolucao_fa(rep, f, A)).matriz,
        atol=1e-10,
    )
    np.testing.assert_allclose(
        convolucao_ab(rep, deslocar(rep, x, A), B).valores,
        deslocar_funcao(convolucao_ab(rep, A, B), x).valores,
        atol=1e-10,
    )


def test_reflexao_de_funcao_e_involucao(rep) -> None:
    f = funcao_aleatoria(criar_gerador(6), rep.espaco)

    np.testing.assert_allclose(refletir_funcao(refletir_funcao(f)).valores, f.valores)


def test_produto_banach_associativo(rep) -> None:
    rng = criar_gerador(8)
    u, v, t = (
        ElementoMisto(funcao_aleatoria(rng, rep.espaco), operador_aleatorio(rng, rep.dim)) for _ in range(3)
    )

    esquerda = produto_banach(rep, produto_banach(rep, u, v), t)
    direita = produto_banach(rep, u, produto_banach(rep, v, t))
    np.testing.assert_allclose(esquerda.funcao.valores, direita.funcao.valores, atol=1e-8)
    np.testing.assert_allclose(esquerda.operador.matriz, direita.operador.matriz, atol=1e-8)
    assert produto_banach(rep, u, v).norma() <= u.norma() * v.norma() * (1 + 1e-9)


def test_operador_de_multiplicacao() -> None:
    rep = _rep([4])
    valores = np.array([1.0, -2.0, 0.5j, 3.0])

    np.testing.assert_allclose(operador_multiplicacao(rep, valores).matriz, np.diag(valores), atol=1e-12)


def test_limite_da_convolucao_de_posto_um() -> None:
    rep = _rep([2, 3])
    rng = criar_gerador(9)
    A = operador_aleatorio(rng, rep.dim)
    phi = rng.standard_normal(rep.dim)
    psi = rng.standard_normal(rep.dim)

    esquerda, direita = limite_convolucao_posto_um(rep, A, phi, psi)
    assert esquerda <= direita + 1e-9


def test_normas_de_schatten_e_lp() -> None:
    A = Operador(np.diag([3.0, -4.0]))

    assert norma_schatten(A, 1) == pytest.approx(7.0)
    assert norma_schatten(A, 2) == pytest.approx(5.0)
    assert norma_schatten(A, math.inf) == pytest.approx(4.0)
    with pytest.raises(ValueError, match="p ≥ 1"):
        norma_schatten(A, 0.5)

    espaco = criar_espaco_fase(criar_grupo([2]))
    delta = identidade_convolucao(espaco)
    assert norma_lp(delta, 1) == pytest.approx(1.0)
    assert norma_lp(delta, math.inf) == pytest.approx(2.0)


def test_grade_de_young() -> None:
    triplas = combinacoes_young()

    assert (1.0, 1.0, 1.0) in triplas
    assert (2.0, 2.0, math.inf) in triplas
    assert (4.0 / 3.0, 4.0 / 3.0, 2.0) in triplas
    assert (2.0, 4.0, 2.0) not in triplas


def test_young_com_igualdade_nos_casos_extremos() -> None:
    rep = _rep([2])
    delta = identidade_convolucao(rep.espaco)
    identidade = Operador.identidade(2)

    assert norma_lp(convolucao_ff(delta, delta), 1) == pytest.approx(norma_lp(delta, 1) ** 2)
    assert norma_lp(convolucao_ab(rep, identidade, identidade), math.inf) == pytest.approx(
        norma_schatten(identidade, 2) ** 2
    )


def test_young_aleatorio(rep) -> None:
    relatorio = verificar_young(rep, criar_gerador(7), tentativas=10)

    assert relatorio.aprovado
    assert relatorio.verificacoes == 10 * 4 * len(combinacoes_young())
    assert relatorio.pior_razao <= 1 + 1e-9


def test_positividade(rep) -> None:
    relatorio = verificar_positividade(rep, criar_gerador(7), tentativas=10)

    assert relatorio.aprovado
    assert relatorio.falhas_detector == 0
    assert inspect.signature(verificar_positividade).parameters["tol"].default == 1e-10


def test_detector_em_z2() -> None:
    rep = _rep([2])
    valor, projetor, ponto = detectar_nao_positividade(rep, Operador(np.diag([1.0, -1.0])))

    assert valor == pytest.approx(-1.0)
    assert projetor.traco() == pytest.approx(1.0)
    assert ponto == 0


def test_espacos_incompativeis() -> None:
    f = FuncaoFase.constante(criar_espaco_fase(criar_grupo([2])), 1)
    g = FuncaoFase.constante(criar_espaco_fase(criar_grupo([3])), 1)

    with pytest.raises(ValueError):
        convolucao_ff(f, g)


def test_produto_banach_comutativo_com_unidade(rep) -> None:
    rng = criar_gerador(17)
    u, v = (ElementoMisto(funcao_aleatoria(rng, rep.espaco), operador_aleatorio(rng, rep.dim)) for _ in range(2))
    unidade = ElementoMisto(identidade_convolucao(rep.espaco), Operador.zero(rep.dim))

    uv, vu = produto_banach(rep, u, v), produto_banach(rep, v, u)
    np.testing.assert_allclose(uv.funcao.valores, vu.funcao.valores, atol=1e-10)
    np.testing.assert_allclose(uv.operador.matriz, vu.operador.matriz, atol=1e-10)
    for produto in (produto_banach(rep, unidade, u), produto_banach(rep, u, unidade)):
        np.testing.assert_allclose(produto.funcao.valores, u.funcao.valores, atol=1e-10)
        np.testing.assert_allclose(produto.operador.matriz, u.operador.matriz, atol=1e-10)


@pytest.mark.parametrize("p", [1.0, 1.5, 2.0, 3.0, math.inf])
def test_normas_de_schatten_invariantes_por_deslocamento(rep, p) -> None:
    A = operador_aleatorio(criar_gerador(18), rep.dim)
    for x in range(rep.espaco.num_pontos):
        assert norma_schatten(deslocar(rep, x, A), p) == pytest.approx(norma_schatten(A, p))


def test_convolucao_de_operadores_valida_as_duas_dimensoes() -> None:
    rep = _rep([2])

    with pytest.raises(ValueError, match="Operador A de dimensão 3"):
        convolucao_ab(rep, Operador.identidade(3), Operador.identidade(2))
    with pytest.raises(ValueError, match="dimensão 3"):
        convolucao_ab(rep, Operador.identidade(2), Operador.identidade(3))
