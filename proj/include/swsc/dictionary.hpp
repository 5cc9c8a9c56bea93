#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "swsc/errors.hpp"

namespace swsc {

/// Per-character window state: frequency, plus the position in the code
/// table when the character is frequent enough to own a codeword.
struct CodeRecord {
    static constexpr std::uint8_t kLiteral = 0xFF;

    std::uint32_t freq = 0;
    std::uint32_t index = 0;             // 0-based offset within its length class
    std::uint8_t length = kLiteral;      // codeword length, or kLiteral

    static constexpr CodeRecord literal(std::uint32_t freq) noexcept { return {freq, 0, kLiteral}; }
    static constexpr CodeRecord coded(std::uint32_t freq, unsigned length, std::uint32_t index) noexcept {
        return {freq, index, static_cast<std::uint8_t>(length)};
    }

    constexpr bool is_coded() const noexcept { return length != kLiteral; }

    friend bool operator==(const CodeRecord&, const CodeRecord&) = default;
};

/// What the coder needs from a window dictionary. find() returns a pointer
/// that stays valid until the next put() or erase().
template <class D>
concept WindowDictionary = requires(D d, const D cd, Symbol a, CodeRecord r) {
    { d.find(a) } -> std::same_as<CodeRecord*>;
    { cd.get(a) } -> std::same_as<std::optional<CodeRecord>>;
    d.put(a, r);
    d.erase(a);
    { cd.size() } -> std::convertible_to<std::size_t>;
    { cd.memory_bytes() } -> std::convertible_to<std::size_t>;
};

enum class Backend : std::uint8_t { trie = 0, hashed = 1 };

inline std::string_view to_string(Backend b) noexcept { return b == Backend::trie ? "trie" : "hashed"; }

inline std::optional<Backend> parse_backend(std::string_view s) noexcept {
    if (s == "trie") return Backend::trie;
    if (s == "hashed") return Backend::hashed;
    return std::nullopt;
}

namespace detail {

inline void check_symbol(Symbol a, std::uint64_t sigma) {
    if (a >= sigma) throw std::out_of_range("symbol " + std::to_string(a) + " outside alphabet");
}

inline void check_record(const CodeRecord& r) {
    if (r.freq == 0) throw std::invalid_argument("dictionary records need freq >= 1");
}

}  // namespace detail

/// Deterministic dictionary: a fixed-height trie over the bits of the key
/// with 2^b-way nodes, b = ceil(eps * width). Child tables are allocated on
/// first use and released as soon as they empty out.
class TrieDictionary {
public:
    explicit TrieDictionary(std::uint64_t sigma, double eps = 0.5) : sigma_(sigma) {
        if (sigma < 2) throw std::invalid_argument("TrieDictionary: sigma must be >= 2");
        if (!(eps > 0.0 && eps <= 1.0)) throw std::invalid_argument("TrieDictionary: eps must lie in (0, 1]");
        const unsigned width = static_cast<unsigned>(std::bit_width(sigma - 1));
        bits_ = std::clamp(static_cast<unsigned>(std::ceil(eps * width)), 1u, width);
        height_ = (width + bits_ - 1) / bits_;
        root_ = make_node(height_ == 1);
    }

    TrieDictionary(TrieDictionary&&) noexcept = default;
    TrieDictionary& operator=(TrieDictionary&&) noexcept = default;

    CodeRecord* find(Symbol a) {
        detail::check_symbol(a, sigma_);
        Node* node = root_.get();
        ++touches_;
        for (unsigned depth = 0; depth + 1 < height_; ++depth) {
            node = node->children[digit(a, depth)].get();
            if (node == nullptr) return nullptr;
            ++touches_;
        }
        CodeRecord& rec = node->records[digit(a, height_ - 1)];
        return rec.freq != 0 ? &rec : nullptr;
    }

    std::optional<CodeRecord> get(Symbol a) const {
        const CodeRecord* rec = const_cast<TrieDictionary*>(this)->find(a);
        return rec ? std::optional<CodeRecord>(*rec) : std::nullopt;
    }

    void put(Symbol a, const CodeRecord& r) {
        detail::check_symbol(a, sigma_);
        detail::check_record(r);
        Node* node = root_.get();
        ++touches_;
        for (unsigned depth = 0; depth + 1 < height_; ++depth) {
            auto& child = node->children[digit(a, depth)];
            if (!child) {
                child = make_node(depth + 2 == height_);
                ++node->live;
            }
            node = child.get();
            ++touches_;
        }
        CodeRecord& rec = node->records[digit(a, height_ - 1)];
        if (rec.freq == 0) {
            ++node->live;
            ++size_;
        }
        rec = r;
    }

    void erase(Symbol a) {
        detail::check_symbol(a, sigma_);
        std::vector<Node*> path;
        path.reserve(height_);
        Node* node = root_.get();
        path.push_back(node);
        ++touches_;
        for (unsigned depth = 0; depth + 1 < height_; ++depth) {
            node = node->children[digit(a, depth)].get();
            if (node == nullptr) throw InternalError("TrieDictionary::erase: key absent");
            path.push_back(node);
            ++touches_;
        }
        CodeRecord& rec = node->records[digit(a, height_ - 1)];
        if (rec.freq == 0) throw InternalError("TrieDictionary::erase: key absent");
        rec = CodeRecord{};
        --node->live;
        --size_;
        for (unsigned depth = height_ - 1; depth > 0 && path[depth]->live == 0; --depth) {
            Node* parent = path[depth - 1];
            release(parent->children[digit(a, depth - 1)]);
            --parent->live;
        }
    }

    std::size_t size() const noexcept { return size_; }
    std::size_t node_count() const noexcept { return nodes_; }
    std::size_t memory_bytes() const noexcept { return sizeof(*this) + node_bytes_; }
    unsigned height() const noexcept { return height_; }
    unsigned branch_bits() const noexcept { return bits_; }
    std::uint64_t touches() const noexcept { return touches_; }

private:
    struct Node {
        std::uint32_t live = 0;  // occupied children or records
        std::unique_ptr<std::unique_ptr<Node>[]> children;
        std::unique_ptr<CodeRecord[]> records;
    };

    std::size_t fanout() const noexcept { return std::size_t{1} << bits_; }

    std::size_t table_bytes(bool leaf) const noexcept {
        return sizeof(Node) + fanout() * (leaf ? sizeof(CodeRecord) : sizeof(std::unique_ptr<Node>));
    }

    std::unique_ptr<Node> make_node(bool leaf) {
        auto node = std::make_unique<Node>();
        if (leaf) {
            node->records = std::make_unique<CodeRecord[]>(fanout());
        } else {
            node->children = std::make_unique<std::unique_ptr<Node>[]>(fanout());
        }
        ++nodes_;
        node_bytes_ += table_bytes(leaf);
        return node;
    }

    void release(std::unique_ptr<Node>& node) {
        --nodes_;
        node_bytes_ -= table_bytes(node->records != nullptr);
        node.reset();
    }

    std::size_t digit(Symbol a, unsigned depth) const noexcept {
        const unsigned shift = (height_ - 1 - depth) * bits_;
        return static_cast<std::size_t>((a >> shift) & (fanout() - 1));
    }

    std::uint64_t sigma_;
    unsigned bits_ = 1;
    unsigned height_ = 1;
    std::unique_ptr<Node> root_;
    std::size_t size_ = 0;
    std::size_t nodes_ = 0;
    std::size_t node_bytes_ = 0;
    mutable std::uint64_t touches_ = 0;
};

/// Randomized dictionary: linear probing with seeded multiply-shift hashing.
/// Capacity doubles above load 1/2 and halves below load 1/8, so storage
/// stays proportional to the number of keys.
class HashedDictionary {
public:
    static constexpr std::size_t kMinCapacity = 8;

    explicit HashedDictionary(std::uint64_t sigma, std::uint64_t seed = 0x9E3779B97F4A7C15ull) : sigma_(sigma) {
        if (sigma < 2) throw std::invalid_argument("HashedDictionary: sigma must be >= 2");
        std::uint64_t state = seed;
        multiplier_ = splitmix64(state) | 1u;
        increment_ = splitmix64(state);
        rebuild(kMinCapacity);
    }

    CodeRecord* find(Symbol a) {
        detail::check_symbol(a, sigma_);
        const std::size_t i = locate(a);
        return slots_[i].key == a ? &slots_[i].rec : nullptr;
    }

    std::optional<CodeRecord> get(Symbol a) const {
        const CodeRecord* rec = const_cast<HashedDictionary*>(this)->find(a);
        return rec ? std::optional<CodeRecord>(*rec) : std::nullopt;
    }

    void put(Symbol a, const CodeRecord& r) {
        detail::check_symbol(a, sigma_);
        detail::check_record(r);
        std::size_t i = locate(a);
        if (slots_[i].key == a) {
            slots_[i].rec = r;
            return;
        }
        if ((size_ + 1) * 2 > slots_.size()) {
            rebuild(slots_.size() * 2);
            i = locate(a);
        }
        slots_[i] = Slot{a, r};
        ++size_;
    }

    void erase(Symbol a) {
        detail::check_symbol(a, sigma_);
        std::size_t hole = locate(a);
        if (slots_[hole].key != a) throw InternalError("HashedDictionary::erase: key absent");
        // Backward-shift deletion keeps probe chains intact without tombstones.
        const std::size_t mask = slots_.size() - 1;
        for (std::size_t j = (hole + 1) & mask; slots_[j].key != kEmpty; j = (j + 1) & mask) {
            const std::size_t home = bucket(slots_[j].key);
            if (((j - home) & mask) >= ((j - hole) & mask)) {
                slots_[hole] = slots_[j];
                hole = j;
            }
        }
        slots_[hole] = Slot{};
        --size_;
        if (slots_.size() > kMinCapacity && size_ * 8 < slots_.size()) rebuild(slots_.size() / 2);
    }

    std::size_t size() const noexcept { return size_; }
    std::size_t capacity() const noexcept { return slots_.size(); }
    std::size_t memory_bytes() const noexcept { return sizeof(*this) + slots_.capacity() * sizeof(Slot); }

private:
    static constexpr Symbol kEmpty = 0xFFFFFFFFu;  // never a valid symbol: sigma <= 2^32 - 1

    struct Slot {
        Symbol key = kEmpty;
        CodeRecord rec;
    };

    static std::uint64_t splitmix64(std::uint64_t& x) noexcept {
        std::uint64_t z = (x += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    std::size_t bucket(Symbol a) const noexcept {
        return static_cast<std::size_t>((multiplier_ * a + increment_) >> shift_);
    }

    // Slot holding `a`, or the empty slot where it would be inserted.
    std::size_t locate(Symbol a) const noexcept {
        const std::size_t mask = slots_.size() - 1;
        std::size_t i = bucket(a);
        while (slots_[i].key != kEmpty && slots_[i].key != a) i = (i + 1) & mask;
        return i;
    }

    void rebuild(std::size_t capacity) {
        std::vector<Slot> old = std::move(slots_);
        slots_.assign(capacity, Slot{});
        slots_.shrink_to_fit();
        shift_ = 64 - static_cast<unsigned>(std::countr_zero(capacity));
        const std::size_t mask = capacity - 1;
        for (const Slot& s : old) {
            if (s.key == kEmpty) continue;
            std::size_t i = bucket(s.key);
            while (slots_[i].key != kEmpty) i = (i + 1) & mask;
            slots_[i] = s;
        }
    }

    std::uint64_t sigma_;
    std::uint64_t multiplier_ = 1;
    std::uint64_t increment_ = 0;
    unsigned shift_ = 61;
    std::vector<Slot> slots_;
    std::size_t size_ = 0;
};

static_assert(WindowDictionary<TrieDictionary>);
static_assert(WindowDictionary<HashedDictionary>);

}  // namespace swsc
