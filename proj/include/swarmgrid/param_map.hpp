#ifndef SWARMGRID_PARAM_MAP_HPP
#define SWARMGRID_PARAM_MAP_HPP

#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "swarmgrid/errors.hpp"

namespace swarmgrid {

using ParamValue = std::variant<std::int64_t, double, bool, std::string, std::vector<double>>;

/// String-keyed, typed configuration map carried into every optimizer and
/// function evaluation. Lookups are strict: asking for a key with the wrong
/// type raises ConfigTypeError rather than coercing.
class ParamMap {
public:
    ParamMap() = default;

    void set(const std::string& key, ParamValue value) { entries_[key] = std::move(value); }
    void set_int(const std::string& key, std::int64_t v) { entries_[key] = v; }
    void set_real(const std::string& key, double v) { entries_[key] = v; }
    void set_bool(const std::string& key, bool v) { entries_[key] = v; }
    void set_str(const std::string& key, std::string v) { entries_[key] = std::move(v); }
    void set_vec(const std::string& key, std::vector<double> v) { entries_[key] = std::move(v); }

    bool has(const std::string& key) const { return entries_.count(key) != 0; }
    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }

    std::int64_t get_int(const std::string& key) const { return get<std::int64_t>(key, "int"); }
    double get_real(const std::string& key) const { return get<double>(key, "real"); }
    bool get_bool(const std::string& key) const { return get<bool>(key, "bool"); }
    const std::string& get_str(const std::string& key) const { return get<std::string>(key, "str"); }
    const std::vector<double>& get_vec(const std::string& key) const {
        return get<std::vector<double>>(key, "vec");
    }

    std::int64_t get_int(const std::string& key, std::int64_t fallback) const {
        return has(key) ? get_int(key) : fallback;
    }
    double get_real(const std::string& key, double fallback) const {
        return has(key) ? get_real(key) : fallback;
    }
    bool get_bool(const std::string& key, bool fallback) const {
        return has(key) ? get_bool(key) : fallback;
    }
    std::string get_str(const std::string& key, const std::string& fallback) const {
        return has(key) ? get_str(key) : fallback;
    }

    /// Returns a copy of this map with every entry of `overlay` written on top.
    ParamMap merged(const ParamMap& overlay) const {
        ParamMap out = *this;
        for (const auto& [k, v] : overlay.entries_) out.entries_[k] = v;
        return out;
    }

    const std::map<std::string, ParamValue>& entries() const { return entries_; }

    bool operator==(const ParamMap& o) const { return entries_ == o.entries_; }

private:
    template <class T>
    const T& get(const std::string& key, const char* type_name) const {
        auto it = entries_.find(key);
        if (it == entries_.end()) throw MissingConfig("missing config key: " + key);
        const T* p = std::get_if<T>(&it->second);
        if (!p)
            throw ConfigTypeError("config key '" + key + "' does not hold a value of type " +
                                  type_name);
        return *p;
    }

    std::map<std::string, ParamValue> entries_;
};

} // namespace swarmgrid

#endif
