#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "swsc/dictionary.hpp"
#include "swsc/errors.hpp"
#include "swsc/params.hpp"
#include "swsc/partial_sums.hpp"

namespace swsc {

struct Codeword {
    std::uint64_t value = 0;  // low `length` bits, MSB first on the wire
    unsigned length = 0;

    friend bool operator==(const Codeword&, const Codeword&) = default;
};

/// Canonical Shannon code over the currently frequent characters.
///
/// Characters are kept in one list per codeword length; a character's
/// codeword is determined by its length j and its offset k within list j:
///
///     value = (sum_{h<j} C[h] 2^{l_max-h} + (k-1) 2^{l_max-j}) >> (l_max-j)
///
/// All Kraft quantities are scaled by 2^{l_max} so the arithmetic is exact.
/// Lists are edited only by append and swap-remove, which is what keeps the
/// offsets reproducible between encoder and decoder.
class Codebook {
public:
    explicit Codebook(unsigned l_max) : l_max_(l_max), lists_(l_max + 1), kraft_(l_max + 1) {
        if (l_max > 62) throw std::invalid_argument("Codebook: l_max too large");
    }

    unsigned l_max() const noexcept { return l_max_; }
    std::size_t count(unsigned j) const { return lists_.at(j).size(); }
    const std::vector<Symbol>& list(unsigned j) const { return lists_.at(j); }

    std::vector<std::size_t> counts() const {
        std::vector<std::size_t> c(lists_.size());
        for (std::size_t j = 0; j < lists_.size(); ++j) c[j] = lists_[j].size();
        return c;
    }

    std::size_t size() const noexcept { return size_; }
    bool empty() const noexcept { return size_ == 0; }

    /// Scaled Kraft sum, sum_j C[j] 2^{l_max-j}; at most 2^{l_max}.
    std::uint64_t kraft_total() const noexcept { return kraft_sum_; }
    const PartialSums& kraft() const noexcept { return kraft_; }

    template <WindowDictionary Dict>
    void insert(Symbol a, unsigned j, Dict& dict) {
        check_length(j);
        CodeRecord* rec = dict.find(a);
        if (rec == nullptr || rec->is_coded()) throw InternalError("Codebook::insert: symbol absent or already coded");
        if (kraft_total() + weight(j) > full()) throw InternalError("Codebook::insert: Kraft sum would exceed 1");
        append(a, j, *rec);
    }

    template <WindowDictionary Dict>
    void remove(Symbol a, Dict& dict) {
        CodeRecord* rec = dict.find(a);
        if (rec == nullptr || !rec->is_coded()) throw InternalError("Codebook::remove: symbol not coded");
        detach(*rec, dict);
        rec = dict.find(a);
        rec->length = CodeRecord::kLiteral;
        rec->index = 0;
    }

    /// Moves a coded symbol to an adjacent length class.
    template <WindowDictionary Dict>
    void move(Symbol a, unsigned j_to, Dict& dict) {
        check_length(j_to);
        CodeRecord* rec = dict.find(a);
        if (rec == nullptr || !rec->is_coded()) throw InternalError("Codebook::move: symbol not coded");
        const unsigned j_from = rec->length;
        if (j_to != j_from + 1 && j_to + 1 != j_from) throw std::logic_error("Codebook::move: classes must be adjacent");
        if (j_to < j_from && kraft_total() - weight(j_from) + weight(j_to) > full()) {
            throw InternalError("Codebook::move: Kraft sum would exceed 1");
        }
        detach(*rec, dict);
        append(a, j_to, *dict.find(a));
    }

    /// Codeword of the k-th (1-based) member of class j.
    Codeword codeword(unsigned j, std::size_t k) const {
        check_length(j);
        if (k < 1 || k > lists_[j].size()) throw std::out_of_range("Codebook::codeword: offset out of range");
        const std::uint64_t scaled = kraft_.prefix(j) + (k - 1) * weight(j);
        return {scaled >> (l_max_ - j), j};
    }

    struct Decoded {
        Symbol symbol;
        unsigned length;
    };

    /// Resolves an l_max-bit lookahead to the symbol whose codeword prefixes it.
    Decoded decode(std::uint64_t lookahead) const {
        if (empty()) throw CorruptStreamError("coded flag with an empty code");
        if (lookahead >= full()) throw std::invalid_argument("Codebook::decode: lookahead wider than l_max bits");
        const auto hit = kraft_.search(lookahead);
        unsigned j = static_cast<unsigned>(std::min<std::size_t>(hit.index, l_max_));
        // Classes past the last nonempty one share its prefix value.
        while (lists_[j].empty()) {
            if (j == 0) throw CorruptStreamError("no codeword class covers the lookahead");
            --j;
        }
        const std::uint64_t base = hit.index > l_max_ ? kraft_.prefix(j) : hit.prefix;
        const std::uint64_t k = (lookahead - base) / weight(j) + 1;
        if (k > lists_[j].size()) throw CorruptStreamError("lookahead falls outside every codeword");
        return {lists_[j][k - 1], j};
    }

    std::size_t memory_bytes() const noexcept {
        std::size_t bytes = sizeof(*this) + lists_.capacity() * sizeof(std::vector<Symbol>);
        for (const auto& l : lists_) bytes += l.capacity() * sizeof(Symbol);
        return bytes - sizeof(PartialSums);
    }

private:
    std::uint64_t full() const noexcept { return std::uint64_t{1} << l_max_; }
    std::uint64_t weight(unsigned j) const noexcept { return std::uint64_t{1} << (l_max_ - j); }

    void check_length(unsigned j) const {
        if (j > l_max_) throw std::out_of_range("codeword length " + std::to_string(j) + " exceeds l_max");
    }

    void append(Symbol a, unsigned j, CodeRecord& rec) {
        lists_[j].push_back(a);
        rec.length = static_cast<std::uint8_t>(j);
        rec.index = static_cast<std::uint32_t>(lists_[j].size() - 1);
        kraft_.add(j + 1, static_cast<std::int64_t>(weight(j)));
        kraft_sum_ += weight(j);
        ++size_;
    }

    // Swap-remove from its list; the record itself is left for the caller.
    template <WindowDictionary Dict>
    void detach(const CodeRecord& rec, Dict& dict) {
        const unsigned j = rec.length;
        const std::uint32_t k = rec.index;
        auto& list = lists_[j];
        if (k >= list.size()) throw InternalError("Codebook: stale offset in dictionary record");
        if (k + 1 != list.size()) {
            const Symbol last = list.back();
            list[k] = last;
            CodeRecord* moved = dict.find(last);
            if (moved == nullptr) throw InternalError("Codebook: coded symbol missing from dictionary");
            moved->index = k;
        }
        list.pop_back();
        kraft_.add(j + 1, -static_cast<std::int64_t>(weight(j)));
        kraft_sum_ -= weight(j);
        --size_;
    }

    unsigned l_max_;
    std::vector<std::vector<Symbol>> lists_;
    PartialSums kraft_;
    std::uint64_t kraft_sum_ = 0;
    std::size_t size_ = 0;
};

}  // namespace swsc
