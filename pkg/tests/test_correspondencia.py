"""Testes das regras de correspondência e das desigualdades de Berezin–Lieb."""
import numpy as np
import pytest

from harmonica.amostras import criar_gerador, densidade_aleatoria, hermitiano_aleatorio
from harmonica.convolucao import ElementoMisto, FuncaoFase, identidade_convolucao
from harmonica.correspondencia import (
    FUNCOES_CONVEXAS,
    aplicar_regra,
    criar_regra,
    recuperar_densidades,
    verificar_berezin_lieb,
    verificar_regra,
)
from harmonica.espaco_fase import criar_espaco_fase
from harmonica.grupo import criar_grupo
from harmonica.representacao import Operador, construir_representacao


def _rep(ordens, tipo="canonical"):
    return construir_representacao(criar_espaco_fase(criar_grupo(ordens), tipo))


@pytest.fixture(params=[([2], "canonical"), ([2, 3], "canonical"), ([3], "weyl")])
def rep(request):
    return _rep(*request.param)


@pytest.fixture
def regra(rep):
    rng = criar_gerador(11)
    return criar_regra(densidade_aleatoria(rng, rep.dim), densidade_aleatoria(rng, rep.dim))


def test_regra_troca_as_unidades(rep, regra) -> None:
    n = rep.dim
    um = FuncaoFase.constante(rep.espaco, 1)
    zero = FuncaoFase.constante(rep.espaco, 0)

    de_um = aplicar_regra(rep, regra, ElementoMisto(um, Operador.zero(n)))
    np.testing.assert_allclose(de_um.funcao.valores, 0, atol=1e-12)
    np.testing.assert_allclose(de_um.operador.matriz, np.eye(n), atol=1e-10)

    de_identidade = aplicar_regra(rep, regra, ElementoMisto(zero, Operador.identidade(n)))
    np.testing.assert_allclose(de_identidade.funcao.valores, 1, atol=1e-10)
    np.testing.assert_allclose(de_identidade.operador.matriz, 0, atol=1e-12)


def test_unidade_da_convolucao_devolve_b2(rep, regra) -> None:
    zero = Operador.zero(rep.dim)
    saida = aplicar_regra(rep, regra, ElementoMisto(identidade_convolucao(rep.espaco), zero))

    np.testing.assert_allclose(saida.operador.matriz, regra.b2.matriz, atol=1e-10)


def test_recupera_as_densidades_de_um_canal(rep, regra) -> None:
    B1, B2 = recuperar_densidades(rep, lambda u: aplicar_regra(rep, regra, u))

    np.testing.assert_allclose(B1.matriz, regra.b1.matriz, atol=1e-10)
    np.testing.assert_allclose(B2.matriz, regra.b2.matriz, atol=1e-10)


def test_verificar_regra(rep, regra) -> None:
    relatorio = verificar_regra(rep, regra, criar_gerador(12), tentativas=10)

    assert relatorio.aprovado
    assert relatorio.como_dicionario()["aprovado"]


def test_criar_regra_valida_densidades() -> None:
    rho = Operador(np.diag([0.5, 0.5]))

    with pytest.raises(ValueError, match="traço 1"):
        criar_regra(rho * 2, rho)
    with pytest.raises(ValueError, match="positivo"):
        criar_regra(rho, Operador(np.diag([1.5, -0.5])))
    with pytest.raises(ValueError, match="hermitiano"):
        criar_regra(Operador(np.array([[0.5, 1.0], [0.0, 0.5]])), rho)
    with pytest.raises(ValueError, match="dimensões"):
        criar_regra(rho, Operador(np.eye(3) / 3))


def test_berezin_lieb_com_igualdade_na_identidade() -> None:
    rep = _rep([2])
    rho = Operador(np.diag([0.5, 0.5]))
    relatorio = verificar_berezin_lieb(rep, criar_regra(rho, rho), Operador.identidade(2))

    assert relatorio.aprovado
    assert relatorio.operador_para_funcao == pytest.approx((2.0, 2.0))


def test_forma_impressa_falha_para_a_constante() -> None:
    rep = _rep([2])
    rho = Operador(np.diag([1.0, 0.0]))
    um = FuncaoFase.constante(rep.espaco, 1)
    relatorio = verificar_berezin_lieb(rep, criar_regra(rho, rho), Operador.identidade(2), f=um)

    assert relatorio.funcao_para_operador == pytest.approx((2.0, 2.0))
    assert relatorio.forma_impressa == pytest.approx((4.0, 2.0))
    assert relatorio.aprovado
    assert not relatorio.forma_impressa_valida


@pytest.mark.parametrize("phi", sorted(FUNCOES_CONVEXAS))
def test_berezin_lieb_aleatorio(rep, regra, phi) -> None:
    A = hermitiano_aleatorio(criar_gerador(13), rep.dim)

    assert verificar_berezin_lieb(rep, regra, A, phi).aprovado


def test_berezin_lieb_rejeita_entradas_invalidas(rep, regra) -> None:
    identidade = Operador.identidade(rep.dim)

    with pytest.raises(ValueError, match="desconhecida"):
        verificar_berezin_lieb(rep, regra, identidade, phi="log")
    with pytest.raises(ValueError, match="hermitiano"):
        verificar_berezin_lieb(rep, regra, Operador(1j * np.eye(rep.dim)))
    with pytest.raises(ValueError, match="real"):
        verificar_berezin_lieb(rep, regra, identidade, f=FuncaoFase.constante(rep.espaco, 1j))
