#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pog/errors.hpp"

namespace pog {

using cell_index = std::int64_t;

inline int mod8(int x) { return ((x % 8) + 8) % 8; }

// Base-8 cell address. Digits are stored most-significant first; the first
// digit is absolute, later digits are increments between consecutive
// contraction indices (all arithmetic mod 8). The first k digits of an
// address are the address of the containing k-cell.
struct Address {
    std::vector<std::uint8_t> digits;

    Address() = default;
    explicit Address(std::vector<std::uint8_t> d) : digits(std::move(d)) { validate(); }
    static Address parse(const std::string& text);

    int level() const { return static_cast<int>(digits.size()); }

    void validate() const {
        if (digits.empty()) throw EmptyAddress("address has no digits");
        if (digits.size() > 6) throw LevelTooLarge("address longer than 6 digits");
        for (auto d : digits)
            if (d > 7) throw InvalidEntry("address digit out of 0..7");
    }

    // Absolute contraction indices j_k = sum of the first k digits mod 8.
    std::vector<int> contraction_indices() const {
        std::vector<int> js(digits.size());
        int s = 0;
        for (size_t k = 0; k < digits.size(); ++k) {
            s = mod8(s + digits[k]);
            js[k] = s;
        }
        return js;
    }

    std::string str() const {
        std::string s;
        for (auto d : digits) s.push_back(static_cast<char>('0' + d));
        return s;
    }

    bool operator==(const Address&) const = default;
};

cell_index address_to_index(const Address& addr);
Address index_to_address(cell_index i, int level);

}  // namespace pog
