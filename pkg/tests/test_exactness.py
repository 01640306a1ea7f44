import itertools

import numpy as np
import pytest

from cech2.cohomology import (
    Cocycle,
    CoboundaryWitness,
    apply_coboundary,
    classify_h1,
    cohomologous_check,
    enumerate_cocycles,
    identity_witness,
    trivial_cocycle,
    validate_cocycle,
)
from cech2.complexes import standard_space
from cech2.crossed_modules import discrete_two_group, hat_construction
from cech2.errors import BudgetExceeded
from cech2.exactness import (
    GroupSES,
    conjugation_crossed_module,
    discrete_crossed_module_ses,
    lemma2_alpha,
    lemma2_beta,
    lemma3_kernel_lift,
    minimal_section,
    pushforward_cocycle,
    trivialization_witness,
    validate_group_ses,
    verify_lemma2,
    verify_lemma3,
)
from cech2.fixtures import z2z4z2_discrete_ses
from cech2.groups import cyclic_group, validate_hom


class TestGroupSES:
    def test_z2z4z2(self, z2z4z2):
        assert z2z4z2.section.tolist() == [0, 1]
        assert z2z4z2.H.order == 2 and z2z4z2.G.order == 4 and z2z4z2.K.order == 2

    def test_rejects_non_exact(self, z2, z4):
        incl = validate_hom(z2, z4, [0, 2])
        proj = validate_hom(z4, z4, [0, 1, 2, 3])
        with pytest.raises(ValueError):
            validate_group_ses(incl, proj)

    def test_section_must_be_normalized(self, z2z4z2):
        with pytest.raises(ValueError):
            validate_group_ses(z2z4z2.inclusion, z2z4z2.projection, section=[2, 1])

    def test_conjugation_crossed_module(self, z2z4z2):
        xm = conjugation_crossed_module(z2z4z2)
        assert xm.alpha.is_trivial()  # Z4 is abelian

    def test_nonabelian_conjugation(self, z3, s3, z2):
        # 1 -> Z3 -> S3 -> Z2 -> 1; conjugation acts nontrivially on the kernel
        incl_values = [0, next(x for x in s3.elements() if s3.element_order(x) == 3)]
        incl_values.append(s3.mul(incl_values[1], incl_values[1]))
        incl = validate_hom(z3, s3, incl_values)
        proj = validate_hom(s3, z2, [0 if x in incl_values else 1 for x in s3.elements()])
        ses = validate_group_ses(incl, proj)
        xm = conjugation_crossed_module(ses)
        assert not xm.alpha.is_trivial()


class TestPushforward:
    def test_identity(self, z2z4, sphere2):
        from cech2.crossed_modules import validate_two_group_hom
        from cech2.groups import identity_hom

        hom = validate_two_group_hom(z2z4, z2z4, identity_hom(z2z4.G), identity_hom(z2z4.H))
        for c in enumerate_cocycles(sphere2, z2z4)[::101]:
            assert pushforward_cocycle(hom, c) == c

    def test_discrete_projection_reduces_edges(self, circle3, z2, z4):
        ses = z2z4z2_discrete_ses()
        xm1 = ses.left.cod
        c = Cocycle(g={(0, 1): 3, (0, 2): 2, (1, 2): 1}, h={})
        out = pushforward_cocycle(ses.right, c)
        assert out.g == {(0, 1): 1, (0, 2): 0, (1, 2): 1}

    def test_trivial_to_trivial_and_validity(self, circle3, z2z4):
        hat, ses = hat_construction(z2z4)
        c = trivial_cocycle(circle3, hat)
        out = pushforward_cocycle(ses.right, c)
        assert out.is_trivial()
        assert validate_cocycle(out, circle3, z2z4)["ok"]

    def test_descends_to_classes(self, circle3, z2z4):
        # cohomologous inputs push to cohomologous outputs: sweep all
        # witnesses of the hat coefficients on the circle
        hat, ses = hat_construction(z2z4)
        cls_mid = classify_h1(circle3, hat)
        cls_out = classify_h1(circle3, z2z4)
        for c in enumerate_cocycles(circle3, hat)[::29]:
            expected = cls_out.class_of(pushforward_cocycle(ses.right, c))
            for f in itertools.product(range(8), repeat=3):
                w = CoboundaryWitness(f={v: f[v] for v in range(3)}, k={e: 0 for e in c.g})
                moved = apply_coboundary(c, w, circle3, hat)
                assert cls_out.class_of(pushforward_cocycle(ses.right, moved)) == expected


class TestLemma2Maps:
    def test_alpha_trivial_to_trivial(self, circle3, z2z4z2):
        xm = conjugation_crossed_module(z2z4z2)
        out = lemma2_alpha(trivial_cocycle(circle3, xm), z2z4z2)
        assert out.is_trivial()

    def test_alpha_reduces_mod_kernel(self, circle3, z2z4z2):
        xm = conjugation_crossed_module(z2z4z2)
        c = Cocycle(g={(0, 1): 3, (0, 2): 2, (1, 2): 1}, h={})
        out = lemma2_alpha(c, z2z4z2)
        assert out.g == {(0, 1): 1, (0, 2): 0, (1, 2): 1}

    def test_alpha_kills_kernel_valued_cocycles(self, circle3, z2z4z2):
        c = Cocycle(g={(0, 1): 2, (0, 2): 0, (1, 2): 2}, h={})
        assert lemma2_alpha(c, z2z4z2).is_trivial()

    def test_beta_trivial(self, circle3, z2z4z2):
        xmk = discrete_two_group(z2z4z2.K)
        out = lemma2_beta(trivial_cocycle(circle3, xmk), z2z4z2, circle3)
        assert out.is_trivial()

    def test_beta_lifts_through_section(self, circle3, z2z4z2):
        xmk = discrete_two_group(z2z4z2.K)
        k = Cocycle(g={(0, 1): 1, (0, 2): 0, (1, 2): 1}, h={})
        out = lemma2_beta(k, z2z4z2, circle3)
        assert all(v in (0, 1) for v in out.g.values())  # minimal preimages

    def test_beta_output_validates_everywhere(self, sphere2, z2z4z2):
        # exhaustive over all K-cocycles on the sphere
        xmk = discrete_two_group(z2z4z2.K)
        xm = conjugation_crossed_module(z2z4z2)
        for k in enumerate_cocycles(sphere2, xmk):
            out = lemma2_beta(k, z2z4z2, sphere2)
            assert validate_cocycle(out, sphere2, xm)["ok"]

    def test_section_independence(self, circle3, sphere2, z2z4z2):
        # both normalized sections of Z4 -> Z2 give cohomologous lifts
        other = validate_group_ses(z2z4z2.inclusion, z2z4z2.projection, section=[0, 3])
        xm = conjugation_crossed_module(z2z4z2)
        for cx in (circle3, sphere2):
            xmk = discrete_two_group(z2z4z2.K)
            for k in enumerate_cocycles(cx, xmk):
                a = lemma2_beta(k, z2z4z2, cx)
                b = lemma2_beta(k, other, cx)
                assert cohomologous_check(a, b, cx, xm) is not None


class TestVerifyLemma2:
    @pytest.mark.parametrize("space", ["circle3", "circle6", "sphere2"])
    def test_z2z4z2(self, space, z2z4z2):
        report = verify_lemma2(z2z4z2, standard_space(space))
        assert report["ok"], report["failures"]
        assert report["classes"] == report["classes_k"]

    def test_k_trivial_collapses(self, circle3, z3):
        # 1 -> Z3 -> Z3 -> 1 -> 1: both sides a single class
        from cech2.groups import identity_hom, trivial_group

        z1 = trivial_group()
        ses = validate_group_ses(identity_hom(z3), validate_hom(z3, z1, [0, 0, 0]))
        report = verify_lemma2(ses, circle3)
        assert report["ok"] and report["classes"] == 1


class TestTrivializationWitness:
    def test_trivial_gets_identity(self, circle3, z2z4):
        c = trivial_cocycle(circle3, z2z4)
        w = trivialization_witness(c, circle3, z2z4)
        assert w is not None and w.is_identity()

    def test_perturbed_trivial_recovered(self, sphere2, z2z4):
        w = CoboundaryWitness(
            f={0: 1, 1: 3, 2: 0, 3: 2},
            k={e: i % 2 for i, e in enumerate(sphere2.edges)},
        )
        c = apply_coboundary(trivial_cocycle(sphere2, z2z4), w, sphere2, z2z4)
        back = trivialization_witness(c, sphere2, z2z4)
        assert back is not None
        assert apply_coboundary(c, back, sphere2, z2z4) == trivial_cocycle(sphere2, z2z4)

    def test_nontrivial_holonomy_not_found(self, circle3, z4):
        xm = discrete_two_group(z4)
        c = Cocycle(g={(0, 1): 1, (0, 2): 0, (1, 2): 0}, h={})
        assert trivialization_witness(c, circle3, xm) is None

    def test_budget(self, circle3, z2z4):
        with pytest.raises(BudgetExceeded):
            trivialization_witness(trivial_cocycle(circle3, z2z4), circle3, z2z4, witness_budget=3)


class TestLemma3KernelLift:
    def test_subgroup_valued_cocycle_lifts_unchanged(self, circle3, z2z4):
        hat, ses = hat_construction(z2z4)
        # edge values in the image of the left map: f(h) = (t(h), h^-1)
        val = int(ses.left.fG(1))
        c = Cocycle(g={(0, 1): val, (0, 2): 0, (1, 2): val}, h={})
        assert validate_cocycle(c, circle3, hat)["ok"]
        lift, w = lemma3_kernel_lift(c, ses, identity_witness(circle3), circle3)
        assert w.is_identity()
        assert pushforward_cocycle(ses.left, lift) == c

    def test_every_kernel_class_lifts_hat_circle(self, circle3, z2z4):
        hat, ses = hat_construction(z2z4)
        cls1 = classify_h1(circle3, hat)
        lifted = 0
        for rep in cls1.representatives:
            pushed = pushforward_cocycle(ses.right, rep)
            w = trivialization_witness(pushed, circle3, z2z4)
            if w is None:
                continue
            lift, lift_w = lemma3_kernel_lift(rep, ses, w, circle3)
            assert validate_cocycle(lift, circle3, ses.left.dom)["ok"]
            assert apply_coboundary(rep, lift_w, circle3, hat) == pushforward_cocycle(ses.left, lift)
            lifted += 1
        assert lifted == 2

    def test_discrete_ses_sphere(self, sphere2):
        ses = z2z4z2_discrete_ses()
        cls1 = classify_h1(sphere2, ses.left.cod)
        for rep in cls1.representatives:
            pushed = pushforward_cocycle(ses.right, rep)
            w = trivialization_witness(pushed, sphere2, ses.right.cod)
            if w is not None:
                lift, _ = lemma3_kernel_lift(rep, ses, w, sphere2)
                assert validate_cocycle(lift, sphere2, ses.left.dom)["ok"]


class TestVerifyLemma3:
    @pytest.mark.parametrize("space", ["circle3", "sphere2"])
    def test_hat_sequence(self, space, z2z4):
        _, ses = hat_construction(z2z4)
        report = verify_lemma3(ses, standard_space(space))
        assert report["ok"], report["failures"]
        assert report["image"] == report["kernel"]

    @pytest.mark.parametrize("space", ["circle3", "sphere2"])
    def test_discrete_sequence(self, space):
        report = verify_lemma3(z2z4z2_discrete_ses(), standard_space(space))
        assert report["ok"], report["failures"]

    def test_circle_kernel_is_proper_nontrivial(self, circle3):
        # the kernel on the circle is the classic index-two behavior
        report = verify_lemma3(z2z4z2_discrete_ses(), circle3)
        assert report["classes"] == [2, 4, 2]
        assert report["kernel"] == [0, 2]

    def test_point_everything_trivial(self, z2z4):
        _, ses = hat_construction(z2z4)
        report = verify_lemma3(ses, standard_space("point"))
        assert report["ok"] and report["classes"] == [1, 1, 1]
