from hodgering.verify import run_all

EXPECTED_TAGS = {
    "rank_hodge", "rank_poincare", "rank_hirzebruch", "rank_chern_hodge", "normal_monomial_count",
    "abc_isomorphism", "wxyz_isomorphism", "birational_ideal_is_ker_b", "elliptic_ideal_is_ker_chi",
    "kernel_f_is_G", "image_f_rank", "signature_of_G", "forget_of_G", "sphere4_identity",
    "s2_three_signature", "chi_projective_line", "chi_projective_plane", "hrr_projective_monomials",
    "hrr_todd_through_chern_numbers", "kahler_image_parity", "top_chern_is_euler", "s2_signature_degree2",
    "rewriting_confluence", "chern_hodge_presentation", "kernel_F_codimension", "kernel_Ftilde_strict",
    "hrr_forms_vanish", "classifier_regressions",
}


def test_verify_default_degree_passes_every_tag():
    results = run_all(6, 20, 0)
    assert {r.tag for r in results} == EXPECTED_TAGS
    assert [r.tag for r in results if not r.passed] == []


def test_verify_is_deterministic():
    a = [r.to_json() for r in run_all(3, 5, 11)]
    b = [r.to_json() for r in run_all(3, 5, 11)]
    assert a == b
