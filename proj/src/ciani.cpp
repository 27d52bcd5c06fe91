// The factors G (degree 6), H (degree 9) and J (degree 12) of the Luroth
// invariant restricted to the Ciani family a x^4 + b x^2y^2 + c x^2z^2 +
// d y^4 + e y^2z^2 + f z^4, and the exact rational expansion of G^4 H^2 J.
#include "luroth/relations.hpp"

namespace luroth {

namespace {

using QP = SparsePoly<RatField>;

QP term(const RatField& Q, long num, long den, std::array<int, 6> e) {
    QP p(Q, 6);
    p.add_term({static_cast<std::uint16_t>(e[0]), static_cast<std::uint16_t>(e[1]),
                static_cast<std::uint16_t>(e[2]), static_cast<std::uint16_t>(e[3]),
                static_cast<std::uint16_t>(e[4]), static_cast<std::uint16_t>(e[5])},
               mpq_class(num, den));
    return p;
}

// a d f + ka/4 a e^2 + kb/4 b^2 f + kc/4 b c e + kd/4 c^2 d
QP bracket(const RatField& Q, long ka, long kb, long kc, long kd) {
    QP p = term(Q, 1, 1, {1, 0, 0, 1, 0, 1});
    p = p + term(Q, ka, 4, {1, 0, 0, 0, 2, 0});
    p = p + term(Q, kb, 4, {0, 2, 0, 0, 0, 1});
    p = p + term(Q, kc, 4, {0, 1, 1, 0, 1, 0});
    p = p + term(Q, kd, 4, {0, 0, 2, 1, 0, 0});
    return p;
}

}  // namespace

SparsePoly<RatField> ciani_factor_G() {
    RatField Q;
    return term(Q, 1, 1, {1, 0, 0, 1, 0, 1}) * bracket(Q, -1, -1, -1, -1);
}

SparsePoly<RatField> ciani_factor_H() {
    RatField Q;
    return bracket(Q, -1, -1, 1, 3) * bracket(Q, -1, 3, 1, -1) * bracket(Q, 3, -1, 1, -1);
}

SparsePoly<RatField> ciani_factor_J() {
    RatField Q;
    struct T { long n, d; std::array<int, 6> e; };
    static const T terms[] = {
        {1, 1, {4, 0, 0, 4, 0, 4}},        {-1, 49, {4, 0, 0, 3, 2, 3}},
        {51, 19208, {4, 0, 0, 2, 4, 2}},   {-1, 38416, {4, 0, 0, 1, 6, 1}},
        {1, 614656, {4, 0, 0, 0, 8, 0}},   {-1, 49, {3, 2, 0, 3, 0, 4}},
        {-205, 9604, {3, 2, 0, 2, 2, 3}},  {-3, 38416, {3, 2, 0, 1, 4, 2}},
        {1, 153664, {3, 2, 0, 0, 6, 1}},   {15, 343, {3, 1, 1, 3, 1, 3}},
        {29, 9604, {3, 1, 1, 2, 3, 2}},    {-5, 38416, {3, 1, 1, 1, 5, 1}},
        {-1, 153664, {3, 1, 1, 0, 7, 0}},  {-1, 49, {3, 0, 2, 4, 0, 3}},
        {-205, 9604, {3, 0, 2, 3, 2, 2}},  {-3, 38416, {3, 0, 2, 2, 4, 1}},
        {1, 153664, {3, 0, 2, 1, 6, 0}},   {51, 19208, {2, 4, 0, 2, 0, 4}},
        {-3, 38416, {2, 4, 0, 1, 2, 3}},   {3, 307328, {2, 4, 0, 0, 4, 2}},
        {29, 9604, {2, 3, 1, 2, 1, 3}},    {-5, 19208, {2, 3, 1, 1, 3, 2}},
        {-3, 153664, {2, 3, 1, 0, 5, 1}},  {-205, 9604, {2, 2, 2, 3, 0, 3}},
        {2, 2401, {2, 2, 2, 2, 2, 2}},     {55, 153664, {2, 2, 2, 1, 4, 1}},
        {3, 307328, {2, 2, 2, 0, 6, 0}},   {29, 9604, {2, 1, 3, 3, 1, 2}},
        {-5, 19208, {2, 1, 3, 2, 3, 1}},   {-3, 153664, {2, 1, 3, 1, 5, 0}},
        {51, 19208, {2, 0, 4, 4, 0, 2}},   {-3, 38416, {2, 0, 4, 3, 2, 1}},
        {3, 307328, {2, 0, 4, 2, 4, 0}},   {-1, 38416, {1, 6, 0, 1, 0, 4}},
        {1, 153664, {1, 6, 0, 0, 2, 3}},   {-5, 38416, {1, 5, 1, 1, 1, 3}},
        {-3, 153664, {1, 5, 1, 0, 3, 2}},  {-3, 38416, {1, 4, 2, 2, 0, 3}},
        {55, 153664, {1, 4, 2, 1, 2, 2}},  {3, 153664, {1, 4, 2, 0, 4, 1}},
        {-5, 19208, {1, 3, 3, 2, 1, 2}},   {-17, 76832, {1, 3, 3, 1, 3, 1}},
        {-1, 153664, {1, 3, 3, 0, 5, 0}},  {-3, 38416, {1, 2, 4, 3, 0, 2}},
        {55, 153664, {1, 2, 4, 2, 2, 1}},  {3, 153664, {1, 2, 4, 1, 4, 0}},
        {-5, 38416, {1, 1, 5, 3, 1, 1}},   {-3, 153664, {1, 1, 5, 2, 3, 0}},
        {-1, 38416, {1, 0, 6, 4, 0, 1}},   {1, 153664, {1, 0, 6, 3, 2, 0}},
        {1, 614656, {0, 8, 0, 0, 0, 4}},   {-1, 153664, {0, 7, 1, 0, 1, 3}},
        {1, 153664, {0, 6, 2, 1, 0, 3}},   {3, 307328, {0, 6, 2, 0, 2, 2}},
        {-3, 153664, {0, 5, 3, 1, 1, 2}},  {-1, 153664, {0, 5, 3, 0, 3, 1}},
        {3, 307328, {0, 4, 4, 2, 0, 2}},   {3, 153664, {0, 4, 4, 1, 2, 1}},
        {1, 614656, {0, 4, 4, 0, 4, 0}},   {-3, 153664, {0, 3, 5, 2, 1, 1}},
        {-1, 153664, {0, 3, 5, 1, 3, 0}},  {1, 153664, {0, 2, 6, 3, 0, 1}},
        {3, 307328, {0, 2, 6, 2, 2, 0}},   {-1, 153664, {0, 1, 7, 3, 1, 0}},
        {1, 614656, {0, 0, 8, 4, 0, 0}},
    };
    QP J(Q, 6);
    for (const auto& t : terms) J = J + term(Q, t.n, t.d, t.e);
    return J;
}

SparsePoly<RatField> expand_ciani_product() {
    auto G = ciani_factor_G();
    auto H = ciani_factor_H();
    auto G2 = G * G;
    return ((G2 * G2) * (H * H)) * ciani_factor_J();
}

}  // namespace luroth
