#include "rankforge/vnrank.hpp"

#include <utility>

namespace rankforge {

namespace {

const FieldSpec& model_field() {
    static const FieldSpec spec = FieldSpec::gaussian_rationals();
    return spec;
}

void require_same_shape(const BlockAlgebraElem& a, const BlockAlgebraElem& b,
                        const char* what) {
    if (!(a.shape() == b.shape()))
        throw ShapeMismatch(std::string(what) +
                            " over different block shapes");
}

} // namespace

BlockShape::BlockShape(std::vector<std::size_t> dims)
    : dims_(std::move(dims)) {
    if (dims_.empty())
        throw BadDimension("block shape must list at least one block");
    for (std::size_t n : dims_)
        if (n == 0)
            throw BadDimension("block dimensions must be positive");
}

std::string BlockShape::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < dims_.size(); ++i) {
        if (i > 0)
            s += ",";
        s += std::to_string(dims_[i]);
    }
    return s + ")";
}

BlockAlgebraElem::BlockAlgebraElem(const BlockShape& shape) : shape_(shape) {
    blocks_.reserve(shape_.blocks());
    for (std::size_t n : shape_.dims())
        blocks_.emplace_back(n, n, model_field());
}

BlockAlgebraElem BlockAlgebraElem::identity(const BlockShape& shape) {
    BlockAlgebraElem r(shape);
    for (std::size_t i = 0; i < shape.blocks(); ++i)
        r.blocks_[i] = ExactMatrix::identity(shape.dim(i), model_field());
    return r;
}

BlockAlgebraElem BlockAlgebraElem::adjoint() const {
    BlockAlgebraElem r(shape_);
    for (std::size_t i = 0; i < blocks_.size(); ++i)
        r.blocks_[i] = blocks_[i].conjugate_transpose();
    return r;
}

bool BlockAlgebraElem::is_zero() const {
    for (const ExactMatrix& b : blocks_)
        if (!b.is_zero())
            return false;
    return true;
}

bool BlockAlgebraElem::is_idempotent() const {
    for (const ExactMatrix& b : blocks_)
        if (b * b != b)
            return false;
    return true;
}

bool BlockAlgebraElem::is_projection() const {
    for (const ExactMatrix& b : blocks_)
        if (b != b.conjugate_transpose() || b * b != b)
            return false;
    return true;
}

BlockAlgebraElem BlockAlgebraElem::operator-() const {
    BlockAlgebraElem r(shape_);
    for (std::size_t i = 0; i < blocks_.size(); ++i)
        r.blocks_[i] = -blocks_[i];
    return r;
}

BlockAlgebraElem operator+(const BlockAlgebraElem& a,
                           const BlockAlgebraElem& b) {
    require_same_shape(a, b, "adding operators");
    BlockAlgebraElem r(a.shape_);
    for (std::size_t i = 0; i < r.blocks_.size(); ++i)
        r.blocks_[i] = a.blocks_[i] + b.blocks_[i];
    return r;
}

BlockAlgebraElem operator-(const BlockAlgebraElem& a,
                           const BlockAlgebraElem& b) {
    require_same_shape(a, b, "subtracting operators");
    BlockAlgebraElem r(a.shape_);
    for (std::size_t i = 0; i < r.blocks_.size(); ++i)
        r.blocks_[i] = a.blocks_[i] - b.blocks_[i];
    return r;
}

BlockAlgebraElem operator*(const BlockAlgebraElem& a,
                           const BlockAlgebraElem& b) {
    require_same_shape(a, b, "multiplying operators");
    BlockAlgebraElem r(a.shape_);
    for (std::size_t i = 0; i < r.blocks_.size(); ++i)
        r.blocks_[i] = a.blocks_[i] * b.blocks_[i];
    return r;
}

std::string BlockAlgebraElem::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
        s += "block " + std::to_string(i) + ":\n";
        s += blocks_[i].to_string();
    }
    return s;
}

std::vector<std::string> CenterValue::to_strings() const {
    std::vector<std::string> out;
    out.reserve(components.size());
    for (const mpq_class& q : components)
        out.push_back(q.get_str());
    return out;
}

std::string CenterValue::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < components.size(); ++i) {
        if (i > 0)
            s += ", ";
        s += components[i].get_str();
    }
    return s + ")";
}

CenterValue operator+(const CenterValue& a, const CenterValue& b) {
    if (a.components.size() != b.components.size())
        throw ShapeMismatch("adding center values of different lengths");
    CenterValue r;
    r.components.reserve(a.components.size());
    for (std::size_t i = 0; i < a.components.size(); ++i)
        r.components.push_back(a.components[i] + b.components[i]);
    return r;
}

bool center_leq(const CenterValue& a, const CenterValue& b) {
    if (a.components.size() != b.components.size())
        throw ShapeMismatch("comparing center values of different lengths");
    for (std::size_t i = 0; i < a.components.size(); ++i)
        if (a.components[i] > b.components[i])
            return false;
    return true;
}

CenterValue center_trace(const BlockAlgebraElem& a) {
    CenterValue r;
    r.components.reserve(a.shape().blocks());
    for (std::size_t i = 0; i < a.shape().blocks(); ++i) {
        const ExactMatrix& block = a.block(i);
        FieldElem sum = FieldElem::zero(block.spec());
        for (std::size_t k = 0; k < block.rows(); ++k)
            sum += block.at(k, k);
        if (sum.im() != 0)
            throw Error("center trace left the rational center "
                        "(nonzero imaginary part)");
        r.components.push_back(sum.re() /
                               mpq_class(static_cast<unsigned long>(
                                   a.shape().dim(i))));
    }
    return r;
}

namespace {

// Greedy column basis: keep a column exactly when it raises the rank of
// the kept set. Returns an n x rank(m) matrix whose columns span the
// column space.
ExactMatrix column_space_basis(const ExactMatrix& m) {
    std::vector<std::size_t> kept;
    unsigned have = 0;
    for (std::size_t j = 0; j < m.cols(); ++j) {
        ExactMatrix candidate(m.rows(), kept.size() + 1, m.spec());
        for (std::size_t i = 0; i < m.rows(); ++i) {
            for (std::size_t k = 0; k < kept.size(); ++k)
                candidate.at(i, k) = m.at(i, kept[k]);
            candidate.at(i, kept.size()) = m.at(i, j);
        }
        if (rank(candidate) > have) {
            kept.push_back(j);
            ++have;
        }
    }
    ExactMatrix basis(m.rows(), kept.size(), m.spec());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t k = 0; k < kept.size(); ++k)
            basis.at(i, k) = m.at(i, kept[k]);
    return basis;
}

ExactMatrix range_projection_block(const ExactMatrix& m) {
    ExactMatrix basis = column_space_basis(m);
    if (basis.cols() == 0)
        return ExactMatrix(m.rows(), m.rows(), m.spec());
    ExactMatrix star = basis.conjugate_transpose();
    return basis * inverse(star * basis) * star;
}

} // namespace

BlockAlgebraElem range_projection(const BlockAlgebraElem& a) {
    BlockAlgebraElem r(a.shape());
    for (std::size_t i = 0; i < a.shape().blocks(); ++i)
        r.block(i) = range_projection_block(a.block(i));
    return r;
}

BlockAlgebraElem null_projection(const BlockAlgebraElem& a) {
    return BlockAlgebraElem::identity(a.shape()) -
           range_projection(a.adjoint());
}

CenterValue center_rank(const BlockAlgebraElem& a) {
    CenterValue r;
    r.components.reserve(a.shape().blocks());
    for (std::size_t i = 0; i < a.shape().blocks(); ++i) {
        mpq_class q(static_cast<unsigned long>(rank(a.block(i))),
                    static_cast<unsigned long>(a.shape().dim(i)));
        q.canonicalize();
        r.components.push_back(q);
    }
    return r;
}

BlockAlgebraElem proj_join(const BlockAlgebraElem& e,
                           const BlockAlgebraElem& f) {
    require_same_shape(e, f, "joining projections");
    if (!e.is_projection() || !f.is_projection())
        throw NotAProjection("join requires self-adjoint idempotents");
    return range_projection(e + f);
}

BlockAlgebraElem proj_meet(const BlockAlgebraElem& e,
                           const BlockAlgebraElem& f) {
    require_same_shape(e, f, "meeting projections");
    const BlockAlgebraElem ident = BlockAlgebraElem::identity(e.shape());
    return ident - proj_join(ident - e, ident - f);
}

SubadditivityRecord subadditivity_check(const BlockAlgebraElem& a,
                                        const BlockAlgebraElem& b) {
    require_same_shape(a, b, "subadditivity check");
    SubadditivityRecord rec;
    rec.lhs = center_rank(a + b);
    rec.rhs = center_rank(a) + center_rank(b);
    if (!center_leq(rec.lhs, rec.rhs))
        throw Error("rank subadditivity violated; arithmetic bug");
    rec.equal = rec.lhs == rec.rhs;
    rec.condition_holds =
        proj_meet(range_projection(a), range_projection(b)).is_zero() &&
        proj_join(null_projection(a), null_projection(b)) ==
            BlockAlgebraElem::identity(a.shape());
    return rec;
}

CochranRecord cochran_check(const std::vector<BlockAlgebraElem>& parts,
                            const BlockAlgebraElem& e) {
    for (const BlockAlgebraElem& part : parts)
        require_same_shape(part, e, "summand in decomposition check");
    if (!e.is_idempotent())
        throw NotIdempotent("decomposition target must be idempotent");
    BlockAlgebraElem sum(e.shape());
    for (const BlockAlgebraElem& part : parts)
        sum = sum + part;
    if (sum != e)
        throw SumMismatch("summands do not add up to the target");

    CochranRecord rec;
    CenterValue total{std::vector<mpq_class>(e.shape().blocks(), 0)};
    for (const BlockAlgebraElem& part : parts)
        total = total + center_rank(part);
    rec.rank_sum_matches = total == center_rank(e);

    const BlockAlgebraElem zero(e.shape());
    rec.mutually_orthogonal_idempotents = true;
    for (std::size_t i = 0;
         rec.mutually_orthogonal_idempotents && i < parts.size(); ++i)
        for (std::size_t j = 0; j < parts.size(); ++j) {
            const BlockAlgebraElem& want = i == j ? parts[i] : zero;
            if (parts[i] * parts[j] != want) {
                rec.mutually_orthogonal_idempotents = false;
                break;
            }
        }
    rec.theorem_consistent =
        rec.rank_sum_matches == rec.mutually_orthogonal_idempotents;
    return rec;
}

IdempotentSumRecord
idempotent_sum_check(const std::vector<BlockAlgebraElem>& family) {
    if (family.empty())
        return {true, true, true};
    for (const BlockAlgebraElem& e : family) {
        require_same_shape(e, family.front(), "family member");
        if (!e.is_idempotent())
            throw NotIdempotent("family members must be idempotent");
    }
    IdempotentSumRecord rec;
    BlockAlgebraElem sum(family.front().shape());
    for (const BlockAlgebraElem& e : family)
        sum = sum + e;
    rec.sum_idempotent = sum.is_idempotent();

    const BlockAlgebraElem zero(family.front().shape());
    rec.mutually_orthogonal = true;
    for (std::size_t i = 0; rec.mutually_orthogonal && i < family.size(); ++i)
        for (std::size_t j = 0; j < family.size(); ++j) {
            if (i == j)
                continue;
            if (family[i] * family[j] != zero) {
                rec.mutually_orthogonal = false;
                break;
            }
        }
    rec.theorem_consistent = rec.sum_idempotent == rec.mutually_orthogonal;
    return rec;
}

BlockAlgebraElem sample_block_general(const BlockShape& shape,
                                      SplitMix64& rng) {
    BlockAlgebraElem r(shape);
    for (std::size_t i = 0; i < shape.blocks(); ++i)
        r.block(i) =
            sample_general(shape.dim(i), shape.dim(i), model_field(), rng);
    return r;
}

BlockAlgebraElem sample_block_idempotent(const BlockShape& shape,
                                         SplitMix64& rng) {
    BlockAlgebraElem r(shape);
    for (std::size_t i = 0; i < shape.blocks(); ++i) {
        const std::size_t n = shape.dim(i);
        r.block(i) = sample_idempotent(n, rng.below(n + 1), model_field(),
                                       rng);
    }
    return r;
}

BlockAlgebraElem sample_block_projection(const BlockShape& shape,
                                         SplitMix64& rng) {
    BlockAlgebraElem r(shape);
    for (std::size_t i = 0; i < shape.blocks(); ++i) {
        const std::size_t n = shape.dim(i);
        r.block(i) = sample_projection(n, rng.below(n + 1), model_field(),
                                       rng);
    }
    return r;
}

std::vector<BlockAlgebraElem>
sample_orthogonal_idempotent_family(const BlockShape& shape,
                                    std::size_t count, SplitMix64& rng) {
    std::vector<BlockAlgebraElem> family(count, BlockAlgebraElem(shape));
    for (std::size_t i = 0; i < shape.blocks(); ++i) {
        const std::size_t n = shape.dim(i);
        ExactMatrix s = sample_invertible(n, model_field(), rng);
        ExactMatrix s_inv = inverse(s);
        // Split the diagonal into `count` disjoint runs of sizes summing
        // to at most n; member k owns run k.
        std::size_t used = 0;
        for (std::size_t k = 0; k < count; ++k) {
            const std::size_t r = rng.below(n - used + 1);
            ExactMatrix d(n, n, model_field());
            for (std::size_t t = 0; t < r; ++t)
                d.at(used + t, used + t) = FieldElem::one(model_field());
            family[k].block(i) = s * d * s_inv;
            used += r;
        }
    }
    return family;
}

} // namespace rankforge
