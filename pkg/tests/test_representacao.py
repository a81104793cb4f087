"""Testes da representação de Schrödinger e da paridade."""
import numpy as np
import pytest

from harmonica.amostras import criar_gerador, operador_aleatorio
from harmonica.espaco_fase import criar_espaco_fase, multiplicador_tabelado, multiplicador_canonico
from harmonica.grupo import criar_grupo
from harmonica.representacao import (
    Operador,
    construir_representacao,
    decompor_covariante,
    deslocamentos,
    deslocar,
    desvio_ccr,
    desvio_paridade,
    desvio_unitariedade,
    posto_irredutibilidade,
    refletir,
    verificar_moyal,
)

CASOS = [([2], "canonical"), ([4], "canonical"), ([2, 3], "canonical"), ([3], "weyl"), ([3, 3], "weyl")]


@pytest.fixture(params=CASOS, ids=lambda caso: f"{caso[0]}-{caso[1]}")
def rep(request):
    ordens, tipo = request.param
    return construir_representacao(criar_espaco_fase(criar_grupo(ordens), tipo))


def test_invariantes_da_representacao(rep) -> None:
    assert desvio_unitariedade(rep) <= 1e-12
    assert desvio_ccr(rep) <= 1e-10
    assert desvio_paridade(rep) <= 1e-12
    assert posto_irredutibilidade(rep) == rep.dim ** 2


def test_moyal(rep) -> None:
    relatorio = verificar_moyal(rep, criar_gerador(7), tentativas=20)

    assert relatorio.aprovado
    assert relatorio.desvio_maximo <= 1e-10


def test_unitario_na_origem_e_identidade(rep) -> None:
    np.testing.assert_allclose(rep.U(0).matriz, np.eye(rep.dim), atol=1e-12)


def test_deslocamentos_em_lote_coincidem_com_deslocar(rep) -> None:
    A = operador_aleatorio(criar_gerador(3), rep.dim)
    todos = deslocamentos(rep, A)

    for z in (0, 1, rep.espaco.num_pontos - 1):
        np.testing.assert_allclose(todos[z], deslocar(rep, z, A).matriz, atol=1e-12)


def test_paridade_em_z2_e_identidade() -> None:
    rep = construir_representacao(criar_espaco_fase(criar_grupo([2])))

    np.testing.assert_allclose(rep.paridade, np.eye(2))


def test_paridade_reflete_a_base() -> None:
    rep = construir_representacao(criar_espaco_fase(criar_grupo([4])))
    A = Operador(np.diag([1.0, 2.0, 3.0, 4.0]))

    np.testing.assert_allclose(refletir(rep, A).matriz, np.diag([1.0, 4.0, 3.0, 2.0]))


def test_multiplicador_tabelado_nao_constroi_representacao() -> None:
    grupo = criar_grupo([2])
    m = multiplicador_tabelado(grupo, multiplicador_canonico(grupo).matriz())

    with pytest.raises(ValueError):
        construir_representacao(criar_espaco_fase(grupo, m))


def test_decomposicao_covariante_de_um_unitario(rep) -> None:
    z = rep.espaco.num_pontos - 1
    resultado = decompor_covariante(rep, rep.U(z) * 2.5)

    assert resultado is not None
    b, ponto = resultado
    assert b == pytest.approx(2.5)
    assert rep.espaco.indice(ponto) == z


def test_decomposicao_covariante_rejeita_projetor() -> None:
    rep = construir_representacao(criar_espaco_fase(criar_grupo([2])))

    assert decompor_covariante(rep, Operador(np.diag([1.0, 0.0]))) is None


def test_decomposicao_covariante_do_operador_nulo() -> None:
    rep = construir_representacao(criar_espaco_fase(criar_grupo([2])))

    with pytest.raises(ValueError, match="nulo"):
        decompor_covariante(rep, Operador.zero(2))


def test_operador_rejeita_matriz_nao_quadrada() -> None:
    with pytest.raises(ValueError, match="quadrada"):
        Operador(np.zeros((2, 3)))


def test_pauli_em_z2() -> None:
    rep = construir_representacao(criar_espaco_fase(criar_grupo([2])))
    X = rep.U(((1,), (0,))).matriz
    Z = rep.U(((0,), (1,))).matriz

    np.testing.assert_allclose(X, [[0, 1], [1, 0]], atol=1e-12)
    np.testing.assert_allclose(Z, [[1, 0], [0, -1]], atol=1e-12)
    np.testing.assert_allclose(X @ Z, -rep.U(((1,), (1,))).matriz, atol=1e-12)


def test_deslocamentos_compoem_pela_soma(rep) -> None:
    A = operador_aleatorio(criar_gerador(14), rep.dim)
    espaco = rep.espaco
    rng = criar_gerador(15)
    for _ in range(5):
        x, y = (int(i) for i in rng.integers(espaco.num_pontos, size=2))
        composto = deslocar(rep, x, deslocar(rep, y, A))
        np.testing.assert_allclose(
            composto.matriz, deslocar(rep, int(espaco.tabela_soma[x, y]), A).matriz, atol=1e-12
        )


def test_reflexao_e_involucao_e_inverte_deslocamentos(rep) -> None:
    A = operador_aleatorio(criar_gerador(16), rep.dim)
    espaco = rep.espaco

    np.testing.assert_allclose(refletir(rep, refletir(rep, A)).matriz, A.matriz, atol=1e-12)
    for x in range(espaco.num_pontos):
        esquerda = deslocar(rep, x, refletir(rep, A))
        direita = refletir(rep, deslocar(rep, int(espaco.negativo[x]), A))
        np.testing.assert_allclose(esquerda.matriz, direita.matriz, atol=1e-12)
