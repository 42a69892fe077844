#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qg {

using SymId = int;

struct SymbolInfo {
    std::string name;
    bool invertible = false;
};

// Declared commuting parameters of the coefficient ring.
//
// A "power symbol" is an ordinary symbol that stands for base^colour
// (e.g. U = r^lam); the parser and printer use the association to turn
// linear-form exponents into plain Laurent monomials and back.
class SymbolTable {
  public:
    SymId declare(const std::string& name, bool invertible) {
        if (name == "eps")
            throw std::invalid_argument("'eps' is reserved for the series variable");
        auto it = index_.find(name);
        if (it != index_.end()) {
            if (symbols_[it->second].invertible != invertible)
                throw std::invalid_argument("symbol redeclared with different invertibility: " + name);
            return it->second;
        }
        SymId id = static_cast<SymId>(symbols_.size());
        symbols_.push_back({name, invertible});
        index_[name] = id;
        return id;
    }

    // Declare `power_name` to mean base^colour. The colour symbol itself is a
    // plain (non-invertible) coefficient symbol; the power symbol is invertible.
    SymId declare_power(const std::string& power_name, SymId base, SymId colour) {
        SymId id = declare(power_name, true);
        powers_[id] = {base, colour};
        power_lookup_[{base, colour}] = id;
        return id;
    }

    std::optional<SymId> find(const std::string& name) const {
        auto it = index_.find(name);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    SymId require(const std::string& name) const {
        auto id = find(name);
        if (!id) throw std::invalid_argument("unknown symbol: " + name);
        return *id;
    }

    const std::string& name(SymId id) const { return symbols_.at(id).name; }
    bool invertible(SymId id) const { return symbols_.at(id).invertible; }
    std::size_t size() const { return symbols_.size(); }

    bool is_power(SymId id) const { return powers_.count(id) != 0; }
    std::pair<SymId, SymId> power_of(SymId id) const { return powers_.at(id); }
    std::optional<SymId> power_symbol(SymId base, SymId colour) const {
        auto it = power_lookup_.find({base, colour});
        if (it == power_lookup_.end()) return std::nullopt;
        return it->second;
    }

  private:
    std::vector<SymbolInfo> symbols_;
    std::map<std::string, SymId> index_;
    std::map<SymId, std::pair<SymId, SymId>> powers_;          // U -> (r, lam)
    std::map<std::pair<SymId, SymId>, SymId> power_lookup_;    // (r, lam) -> U
};

} // namespace qg
