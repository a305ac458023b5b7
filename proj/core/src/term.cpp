#include "pik/term.hpp"

#include <vector>

namespace pik {

struct Term::Node {
    Kind kind;
    long a = 0; // Id size / SwapPlus m / Zeta and Scale exponent
    long b = 0; // SwapPlus n
    std::vector<Term> kids;
};

namespace {
constexpr long kMaxObject = 1L << 40;
}

Term Term::id(long n) {
    if (n < 1)
        throw ValidationError("Id object must be positive");
    if (n > kMaxObject)
        throw ValidationError("Id object too large");
    return Term(std::make_shared<Node>(Node{Kind::Id, n, 0, {}}));
}

Term Term::swap_plus(long m, long n) {
    if (m < 1 || n < 1)
        throw ValidationError("SwapPlus blocks must be positive");
    if (m > kMaxObject || n > kMaxObject)
        throw ValidationError("SwapPlus blocks too large");
    return Term(std::make_shared<Node>(Node{Kind::SwapPlus, m, n, {}}));
}

Term Term::zeta(long j) {
    return Term(std::make_shared<Node>(Node{Kind::Zeta, j, 0, {}}));
}

Term Term::v() {
    return Term(std::make_shared<Node>(Node{Kind::V, 0, 0, {}}));
}

Term Term::comp(Term g, Term f) {
    return Term(std::make_shared<Node>(Node{Kind::Comp, 0, 0, {std::move(f), std::move(g)}}));
}

Term Term::sum(Term a, Term b) {
    return Term(std::make_shared<Node>(Node{Kind::Sum, 0, 0, {std::move(a), std::move(b)}}));
}

Term Term::kron(Term a, Term b) {
    return Term(std::make_shared<Node>(Node{Kind::Kron, 0, 0, {std::move(a), std::move(b)}}));
}

Term Term::scale(long j, Term t) {
    return Term(std::make_shared<Node>(Node{Kind::Scale, j, 0, {std::move(t)}}));
}

Term::Kind Term::kind() const { return node_->kind; }
long Term::size() const { return node_->a; }
long Term::swap_m() const { return node_->a; }
long Term::swap_n() const { return node_->b; }
long Term::exponent() const { return node_->a; }

// Comp stores [f, g] so first() is always the morphism applied first.
const Term& Term::first() const { return node_->kids[0]; }
const Term& Term::second() const { return node_->kids[1]; }
const Term& Term::body() const { return node_->kids[0]; }

bool Term::operator==(const Term& rhs) const {
    if (node_ == rhs.node_)
        return true;
    if (node_->kind != rhs.node_->kind || node_->a != rhs.node_->a || node_->b != rhs.node_->b ||
        node_->kids.size() != rhs.node_->kids.size())
        return false;
    for (size_t i = 0; i < node_->kids.size(); ++i)
        if (node_->kids[i] != rhs.node_->kids[i])
            return false;
    return true;
}

namespace {

long dim_at(const Term& t, std::string& path) {
    switch (t.kind()) {
    case Term::Kind::Id:
        return t.size();
    case Term::Kind::SwapPlus:
        return t.swap_m() + t.swap_n();
    case Term::Kind::Zeta:
        return 1;
    case Term::Kind::V:
        return 2;
    case Term::Kind::Scale: {
        const size_t base = path.size();
        path += "/scale";
        long d = dim_at(t.body(), path);
        path.resize(base);
        return d;
    }
    case Term::Kind::Sum:
    case Term::Kind::Kron: {
        const char* tag = t.kind() == Term::Kind::Sum ? "/sum" : "/kron";
        const size_t base = path.size();
        path += tag;
        path += ".left";
        long da = dim_at(t.first(), path);
        path.resize(base);
        path += tag;
        path += ".right";
        long db = dim_at(t.second(), path);
        path.resize(base);
        if (t.kind() == Term::Kind::Sum)
            return da + db;
        if (da > 0 && db > (1L << 40) / da)
            throw ValidationError("tensor object overflows the supported range");
        return da * db;
    }
    case Term::Kind::Comp: {
        const size_t base = path.size();
        path += "/comp.first";
        long df = dim_at(t.first(), path);
        path.resize(base);
        path += "/comp.second";
        long dg = dim_at(t.second(), path);
        path.resize(base);
        if (df != dg)
            throw ShapeError("composition mismatch at " + (path.empty() ? std::string("/") : path) +
                             ": cod " + std::to_string(df) + " vs dom " + std::to_string(dg));
        return df;
    }
    }
    throw ValidationError("unreachable term kind");
}

} // namespace

long term_dim(const Term& t) {
    std::string path;
    return dim_at(t, path);
}

std::pair<long, long> well_formed(const Term& t) {
    long d = term_dim(t);
    return {d, d};
}

} // namespace pik
