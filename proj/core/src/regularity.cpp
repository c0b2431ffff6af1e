#include "sheafreg/regularity.hpp"

#include <algorithm>
#include <limits>

namespace sheafreg {

std::string AffineForm::str(const std::string& var) const {
    using sheafreg::to_string;
    Int q = boost::multiprecision::lcm(denominator(c0), denominator(c1));
    AffineForm scaledForm = scaled(Rat(q));
    Int b = rat_to_int(scaledForm.c1);
    Int a = rat_to_int(scaledForm.c0);
    std::string body;
    if (b != 0) {
        if (b == 1)
            body = var;
        else if (b == -1)
            body = "-" + var;
        else
            body = to_string(b) + var;
    }
    if (a != 0 || body.empty()) {
        if (body.empty())
            body = to_string(a);
        else
            body += (a > 0 ? " + " + to_string(a) : " - " + to_string(Int(-a)));
    }
    if (q == 1)
        return body;
    return "(" + body + ")/" + to_string(q);
}

bool strictly_below_on_ray(const AffineForm& f, const AffineForm& g, long d_from) {
    AffineForm h = g - f;
    if (h.c1 < 0)
        return false;
    if (h.c1 == 0)
        return h.c0 > 0;
    return h.eval(Rat(d_from)) > 0;
}

bool below_or_equal_on_ray(const AffineForm& f, const AffineForm& g, long d_from) {
    AffineForm h = g - f;
    if (h.c1 < 0)
        return false;
    if (h.c1 == 0)
        return h.c0 >= 0;
    return h.eval(Rat(d_from)) >= 0;
}

std::optional<std::vector<long>> equality_points_on_ray(const AffineForm& f, const AffineForm& g,
                                                        long d_from) {
    AffineForm h = g - f;
    if (h.c0 == 0 && h.c1 == 0)
        return std::nullopt;
    std::vector<long> points;
    if (h.c1 != 0) {
        Rat root = -h.c0 / h.c1;
        if (denominator(root) == 1) {
            Int r = numerator(root);
            if (r >= d_from)
                points.push_back(static_cast<long>(r));
        }
    }
    return points;
}

struct RegTerm::Node {
    enum class Kind { Atom, Tensor, Sym, Wedge, Twist, Det } kind;
    std::string name;
    Int atom_rank;
    AffineForm atom_bound;
    long k = 0;
    std::vector<RegTerm> children;
};

RegTerm RegTerm::atom(std::string name, Int rank, AffineForm bound) {
    if (rank < 1)
        throw domain_error("regularity atom requires rank >= 1");
    auto node = std::make_shared<Node>();
    node->kind = Node::Kind::Atom;
    node->name = std::move(name);
    node->atom_rank = std::move(rank);
    node->atom_bound = bound;
    return RegTerm(std::move(node));
}

RegTerm RegTerm::tensor(RegTerm a, RegTerm b) {
    auto node = std::make_shared<Node>();
    node->kind = Node::Kind::Tensor;
    node->children = {std::move(a), std::move(b)};
    return RegTerm(std::move(node));
}

RegTerm RegTerm::sym(long k, RegTerm a) {
    if (k < 0)
        throw domain_error("symmetric power requires k >= 0");
    auto node = std::make_shared<Node>();
    node->kind = Node::Kind::Sym;
    node->k = k;
    node->children = {std::move(a)};
    return RegTerm(std::move(node));
}

RegTerm RegTerm::wedge(long k, RegTerm a) {
    if (k < 0)
        throw domain_error("exterior power requires k >= 0");
    if (Int(k) > a.rank())
        throw domain_error("exterior power exceeds the rank of its operand");
    auto node = std::make_shared<Node>();
    node->kind = Node::Kind::Wedge;
    node->k = k;
    node->children = {std::move(a)};
    return RegTerm(std::move(node));
}

RegTerm RegTerm::twisted(long j, RegTerm a) {
    auto node = std::make_shared<Node>();
    node->kind = Node::Kind::Twist;
    node->k = j;
    node->children = {std::move(a)};
    return RegTerm(std::move(node));
}

RegTerm RegTerm::det(RegTerm a) {
    auto node = std::make_shared<Node>();
    node->kind = Node::Kind::Det;
    node->children = {std::move(a)};
    return RegTerm(std::move(node));
}

Int RegTerm::rank() const {
    switch (node_->kind) {
    case Node::Kind::Atom:
        return node_->atom_rank;
    case Node::Kind::Tensor:
        return node_->children[0].rank() * node_->children[1].rank();
    case Node::Kind::Sym: {
        Int r = node_->children[0].rank();
        return binomial(static_cast<long>(r) + node_->k - 1, node_->k);
    }
    case Node::Kind::Wedge: {
        Int r = node_->children[0].rank();
        return binomial(static_cast<long>(r), node_->k);
    }
    case Node::Kind::Twist:
        return node_->children[0].rank();
    case Node::Kind::Det:
        return 1;
    }
    return 0;
}

AffineForm RegTerm::bound() const {
    switch (node_->kind) {
    case Node::Kind::Atom:
        return node_->atom_bound;
    case Node::Kind::Tensor:
        return node_->children[0].bound() + node_->children[1].bound();
    case Node::Kind::Sym:
    case Node::Kind::Wedge:
        return node_->children[0].bound().scaled(Rat(node_->k));
    case Node::Kind::Twist:
        return node_->children[0].bound() - AffineForm::constant(node_->k);
    case Node::Kind::Det:
        return node_->children[0].bound().scaled(Rat(node_->children[0].rank()));
    }
    return AffineForm::constant(0);
}

std::string RegTerm::str() const {
    switch (node_->kind) {
    case Node::Kind::Atom:
        return node_->name;
    case Node::Kind::Tensor:
        return node_->children[0].str() + " (x) " + node_->children[1].str();
    case Node::Kind::Sym:
        return "S^" + std::to_string(node_->k) + "(" + node_->children[0].str() + ")";
    case Node::Kind::Wedge:
        return "wedge^" + std::to_string(node_->k) + "(" + node_->children[0].str() + ")";
    case Node::Kind::Twist:
        return node_->children[0].str() + "(" + std::to_string(node_->k) + ")";
    case Node::Kind::Det:
        return "det(" + node_->children[0].str() + ")";
    }
    return "?";
}

const char* setting_name(BoundSetting setting) {
    return setting == BoundSetting::ThreefoldInP5 ? "threefold-p5" : "surface-p4";
}

BoundChain projection_bound_chain(BoundSetting setting) {
    const bool threefold = setting == BoundSetting::ThreefoldInP5;
    const long rank = threefold ? 4 : 3;
    // det E = O(-(0+1+...+(rank-1)) - d): the split part comes from the
    // presentation summands O(0), O(-1), ..., the rest is the degree-d
    // cycle class. Regularity of a line bundle is its negated twist.
    AffineForm det_reg = AffineForm::degree() + AffineForm::constant(rank * (rank - 1) / 2);

    RegTerm dual_kernel = RegTerm::atom("E*", Int(rank), AffineForm::constant(-3));
    RegTerm det_e = RegTerm::atom("det E", Int(1), det_reg);
    RegTerm term = RegTerm::tensor(RegTerm::wedge(rank - 1, dual_kernel), det_e);

    BoundChain chain{setting, term, term.bound(), {}, {}};
    chain.axioms = {
        "kodaira-vanishing",
        "irregularity-vanishing",
        "linear-normality",
        "no-containing-quadric",
    };
    chain.notes = {
        std::string("generic projection fibers have length at most ") +
            std::to_string(rank) + ", so the pushforward of the structure sheaf has a " +
            std::to_string(rank) + "-term free presentation with kernel E",
        "E is isomorphic to wedge^" + std::to_string(rank - 1) + "(E*) (x) det E, rank(E) = " +
            std::to_string(rank),
        "reg(X) <= reg(E): vanishing for E(m) makes the presentation surjective on "
        "degree-m sections and kills the higher cohomology of the pushforward",
    };
    if (!threefold)
        chain.notes.push_back("the Veronese surface is the one exception: it satisfies the "
                              "hypotheses yet exceeds the bound");
    return chain;
}

namespace {

constexpr int kScanGuard = 100000;

} // namespace

RegScanResult regularity_scan(const CohTable& table, int dim_x) {
    if (dim_x < 0)
        throw domain_error("regularity scan requires a nonnegative dimension");
    const int i_max = std::min(dim_x + 1, table.top());
    if (i_max < 1)
        throw domain_error("regularity scan needs at least one positive cohomology row");

    std::vector<std::optional<int>> first_zero(static_cast<size_t>(i_max) + 1);
    for (int i = 1; i <= i_max; ++i) {
        auto upper = table.upper_tail(i);
        auto lower = table.lower_tail(i);
        if (!upper || !upper->vanishes())
            throw domain_error("row " + std::to_string(i) +
                               " has no vanishing upper support bound; cannot certify regularity");
        int k = upper->bound;
        bool unbounded_below = false;
        bool stopped = false;
        for (int guard = 0; guard <= kScanGuard && !stopped; ++guard) {
            if (lower && lower->vanishes() && k - 1 <= lower->bound) {
                unbounded_below = true; // the row vanishes identically below as well
                break;
            }
            DimRange v = table.value(i, k - 1);
            if (v.is_zero()) {
                --k;
                continue;
            }
            if (v.lo >= 1) {
                stopped = true; // certainly nonzero just below k
                break;
            }
            throw domain_error("row " + std::to_string(i) + " at twist " + std::to_string(k - 1) +
                               " is the interval " + v.str() + "; cannot certify regularity");
        }
        if (!unbounded_below && !stopped)
            throw domain_error("row " + std::to_string(i) +
                               " never stopped vanishing and carries no lower support "
                               "certificate; cannot certify regularity");
        if (!unbounded_below)
            first_zero[static_cast<size_t>(i)] = k;
    }

    RegScanResult result;
    bool any = false;
    int reg = std::numeric_limits<int>::min();
    for (int i = 1; i <= i_max; ++i)
        if (first_zero[static_cast<size_t>(i)]) {
            any = true;
            reg = std::max(reg, *first_zero[static_cast<size_t>(i)] + i);
        }
    if (!any)
        throw domain_error("no cohomology row obstructs regularity; the table does not describe "
                           "an ideal sheaf of a nonempty subscheme");
    result.reg = reg;
    if (first_zero[1])
        result.first_normal_from = *first_zero[1];
    for (int i = 1; i <= i_max; ++i)
        if (first_zero[static_cast<size_t>(i)] && *first_zero[static_cast<size_t>(i)] + i == reg)
            result.failures.push_back({i, *first_zero[static_cast<size_t>(i)] - 1});
    return result;
}

} // namespace sheafreg
