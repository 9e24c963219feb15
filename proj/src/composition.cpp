#include "quadrics/composition.hpp"

#include <charconv>
#include <stdexcept>

namespace quadrics {

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
    if (parts_.empty())
        throw std::invalid_argument("composition must have at least one part");
    nu_.reserve(parts_.size() + 1);
    nu_.push_back(0);
    for (int p : parts_) {
        if (p <= 0)
            throw std::invalid_argument("composition parts must be positive");
        nu_.push_back(nu_.back() + p);
    }
}

std::vector<int> Composition::descents() const {
    return {nu_.begin() + 1, nu_.end() - 1};
}

int Composition::block_of(int v) const {
    if (v < 1 || v > n())
        throw std::out_of_range("value outside 1..n");
    for (int i = 1; i <= num_parts(); ++i)
        if (v <= nu_[i]) return i;
    return num_parts();  // unreachable
}

std::string Composition::str() const {
    std::string out;
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    return out;
}

Composition Composition::parse(std::string_view text) {
    std::vector<int> parts;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t comma = text.find(',', pos);
        if (comma == std::string_view::npos) comma = text.size();
        int value = 0;
        auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + comma, value);
        if (ec != std::errc{} || ptr != text.data() + comma)
            throw std::invalid_argument("bad composition part in '" + std::string(text) + "'");
        parts.push_back(value);
        pos = comma + 1;
        if (comma == text.size()) break;
    }
    return Composition(std::move(parts));
}

std::vector<Composition> all_compositions(int n) {
    std::vector<Composition> out;
    std::vector<int> parts;
    auto rec = [&](auto&& self, int rest) -> void {
        if (rest == 0) {
            out.emplace_back(parts);
            return;
        }
        for (int p = 1; p <= rest; ++p) {
            parts.push_back(p);
            self(self, rest - p);
            parts.pop_back();
        }
    };
    rec(rec, n);
    return out;
}

}  // namespace quadrics
