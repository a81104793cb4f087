import numpy as np

from harmonica.espaco_fase import multiplicador_canonico, multiplicador_tabelado, multiplicador_weyl
from harmonica.grupo import criar_grupo
from harmonica.suite import (
    TENTATIVAS_BEREZIN_LIEB,
    TENTATIVAS_HAUSDORFF_YOUNG,
    ConfiguracaoExecucao,
    _limpar,
    executar_suite,
)


def test_tabela_valida_ignora_os_itens_sem_representacao() -> None:
    grupo = criar_grupo([2])
    m = multiplicador_tabelado(grupo, multiplicador_canonico(grupo).matriz())
    relatorio = executar_suite(ConfiguracaoExecucao(m, tentativas=2))

    assert relatorio.itens["multiplicador"]["aprovado"]
    assert relatorio.itens["young"]["ignorado"]
    assert "construtiva" in relatorio.itens["young"]["motivo"]
    assert relatorio.aprovado


def test_configuracao_expoe_o_grupo() -> None:
    m = multiplicador_canonico(criar_grupo([2, 3]))
    config = ConfiguracaoExecucao(m)

    assert config.grupo.ordens == (2, 3)
    assert config.semente == 7


def test_limpar_converte_escalares_numpy() -> None:
    dados = _limpar({1: np.float64(0.5), "b": [np.int64(3), np.bool_(True)], "c": (1.0,)})

    assert dados == {"1": 0.5, "b": [3, True], "c": [1.0]}
    assert type(dados["b"][0]) is int


def test_suite_certifica_desigualdades_recuperacao_e_estado_geometrico() -> None:
    m = multiplicador_weyl(criar_grupo([3]))
    relatorio = executar_suite(ConfiguracaoExecucao(m, tentativas=2))
    itens = relatorio.itens

    fourier = itens["fourier"]
    assert fourier["hausdorff_young_tentativas"] == TENTATIVAS_HAUSDORFF_YOUNG == 200
    assert fourier["hausdorff_young_verificacoes"] == 200 * 6
    assert fourier["hausdorff_young_violacoes"] == 0

    correspondencia = itens["correspondencia"]
    assert correspondencia["berezin_lieb"]["tentativas"] == TENTATIVAS_BEREZIN_LIEB == 100
    assert correspondencia["berezin_lieb"]["violacoes"] == 0
    assert correspondencia["recuperacao"]["desvio"] <= 1e-9

    geometrico = itens["wiener"]["estado_geometrico"]
    assert geometrico["regulares"] == {"5": True, "7": True, "8": False}
    assert geometrico["zeros_esperados"] == {"8": True}
    assert geometrico["decrescente"]

    independencia = itens["coorbita"]["independencia_p"]
    assert set(independencia["veredictos"]) == {"1.5", "2.0", "3.0"}
    assert all(independencia["cotas_validas"].values())
    assert independencia["aprovado"]

    assert relatorio.aprovado
