#include <fockvx/basis.hpp>

namespace fockvx
{

Matrix identity_matrix(int n)
{
    Matrix m(static_cast<std::size_t>(n), std::vector<Scalar>(static_cast<std::size_t>(n)));
    for (std::size_t i = 0; i < m.size(); ++i) {
        m[i][i] = 1;
    }
    return m;
}

std::optional<int> first_non_orthonormal_row(const Matrix &rows)
{
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (std::size_t c = 0; c <= r; ++c) {
            Scalar acc;
            for (std::size_t k = 0; k < rows[r].size() && k < rows[c].size(); ++k) {
                acc += rows[r][k].conj() * rows[c][k];
            }
            if (acc != Scalar(r == c ? 1 : 0)) {
                return static_cast<int>(r);
            }
        }
    }
    return std::nullopt;
}

BasisConfig::BasisConfig(Matrix f, Matrix g) : modes_(static_cast<int>(f.size())), f_(std::move(f)), g_(std::move(g))
{
    if (modes_ < 1) {
        throw config_error("basis needs at least one mode");
    }
    auto check = [this](const Matrix &m, const char *name) {
        if (static_cast<int>(m.size()) != modes_) {
            throw config_error(std::string(name) + " has " + std::to_string(m.size()) + " rows, expected "
                               + std::to_string(modes_));
        }
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (static_cast<int>(m[r].size()) != modes_) {
                throw config_error(std::string(name) + " row " + std::to_string(r + 1) + " has "
                                   + std::to_string(m[r].size()) + " entries, expected " + std::to_string(modes_));
            }
        }
        if (const auto bad = first_non_orthonormal_row(m)) {
            throw config_error(std::string(name) + " is not orthonormal: row " + std::to_string(*bad + 1)
                               + " fails the exact Gram check");
        }
    };
    check(f_, "F");
    check(g_, "G");
}

BasisConfig BasisConfig::identity(int modes)
{
    return BasisConfig(identity_matrix(modes), identity_matrix(modes));
}

namespace
{

OneParticleVector row_vector(const Matrix &m, int n)
{
    if (n < 1 || n > static_cast<int>(m.size())) {
        throw std::out_of_range("basis vector index " + std::to_string(n) + " outside 1.."
                                + std::to_string(m.size()));
    }
    OneParticleVector v(static_cast<int>(m.size()));
    const auto &row = m[static_cast<std::size_t>(n - 1)];
    for (std::size_t k = 0; k < row.size(); ++k) {
        v.set(static_cast<int>(k) + 1, row[k]);
    }
    return v;
}

} // namespace

OneParticleVector BasisConfig::f(int n) const
{
    return row_vector(f_, n);
}

OneParticleVector BasisConfig::g(int n) const
{
    return row_vector(g_, n);
}

bool BasisConfig::is_identity() const
{
    const Matrix id = identity_matrix(modes_);
    return f_ == id && g_ == id;
}

} // namespace fockvx
