#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace cyclocrit {

// Dense row-major square-or-rectangular matrix over Z/mZ, m prime, m < 2^63.
// Used for ranks and determinants over F_p and for the CRT determinant moduli.
class ModMatrix
{
public:
    ModMatrix(std::size_t rows, std::size_t cols, std::uint64_t modulus);

    // Entries are reduced into [0, m); negative values are allowed.
    static ModMatrix from_signed(const std::vector<std::int64_t>& row_major, std::size_t rows, std::size_t cols,
                                 std::uint64_t modulus);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::uint64_t modulus() const { return m_; }

    std::uint64_t& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    std::uint64_t at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    // Gaussian elimination, pivot = first nonzero entry in the column.
    std::size_t rank() const;
    std::uint64_t det() const;

private:
    std::size_t rows_, cols_;
    std::uint64_t m_;
    std::vector<std::uint64_t> a_;
};

}  // namespace cyclocrit
