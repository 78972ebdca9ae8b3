#pragma once

#include "qschur/orbits.hpp"

#include <optional>
#include <sstream>

namespace qschur {

// Parsed job description: datum, orbit-set specs and command parameters.
struct JobConfig {
    CartanPtr datum;
    QfSpec qf = QfSpec::regular();
    std::optional<QfSpec> qg;
    std::vector<Rational> q0_list{Rational(1), Rational(3), Rational(5, 2)};
    int box = 1;
    int springer_n = 2;
    int springer_d = 2;
    std::optional<Weight> mu;  // stored coordinates
    int height = 1;
    int jobs = 1;
};

namespace detail {

inline Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(BigInt(s));
    return Rational(BigInt(s.substr(0, slash))) / Rational(BigInt(s.substr(slash + 1)));
}

inline Weight parse_weight(const std::string& s, const CartanDatum& d) {
    Weight w;
    std::istringstream is(s);
    std::string item;
    while (std::getline(is, item, ',')) {
        Rational v = parse_rational(item) * d.coord_denom();
        if (boost::multiprecision::denominator(v) != 1)
            throw UsageError("weight coordinate " + item + " is not in the lattice");
        w.push_back(static_cast<long long>(boost::multiprecision::numerator(v)));
    }
    if (static_cast<int>(w.size()) != d.lattice_dim())
        throw UsageError("weight has " + std::to_string(w.size()) + " coordinates, expected " +
                         std::to_string(d.lattice_dim()));
    return w;
}

inline QfSpec parse_qfspec(const std::string& s, const CartanDatum& d) {
    if (s == "regular") return QfSpec::regular();
    auto colon = s.find(':');
    std::string head = s.substr(0, colon);
    std::string tail = colon == std::string::npos ? "" : s.substr(colon + 1);
    if (head == "box") return QfSpec::box(std::stoi(tail));
    if (head == "iota") return QfSpec::iota(std::stoi(tail));
    if (head == "jmath") return QfSpec::jmath(std::stoi(tail));
    if (head == "list") {
        std::vector<Weight> ws;
        std::istringstream is(tail);
        std::string item;
        while (std::getline(is, item, ';')) ws.push_back(parse_weight(item, d));
        return QfSpec::explicit_list(std::move(ws));
    }
    throw UsageError("unknown orbit-set spec '" + s + "'");
}

} // namespace detail

// key=value text, one or more pairs per line, '#' comments. Collects every
// error with its line and key before failing.
inline JobConfig parse_config(const std::string& text) {
    struct Item {
        int line;
        std::string key, value;
    };
    std::vector<Item> items;
    std::vector<std::string> errors;
    {
        std::istringstream is(text);
        std::string line;
        int lineno = 0;
        while (std::getline(is, line)) {
            ++lineno;
            auto hash = line.find('#');
            if (hash != std::string::npos) line = line.substr(0, hash);
            std::istringstream ls(line);
            std::string tok;
            while (ls >> tok) {
                auto eq = tok.find('=');
                if (eq == std::string::npos) {
                    errors.push_back("line " + std::to_string(lineno) + ": token '" + tok +
                                     "': expected key=value");
                    continue;
                }
                items.push_back({lineno, tok.substr(0, eq), tok.substr(eq + 1)});
            }
        }
    }
    auto fail = [&](const Item& it, const std::string& why) {
        errors.push_back("line " + std::to_string(it.line) + ": " + it.key + ": " + why);
    };

    std::string type_str;
    int rank = 0, dpar = 0;
    const Item* type_item = nullptr;
    std::vector<const Item*> deferred;
    JobConfig cfg;
    for (const auto& it : items) {
        if (it.key == "type") {
            type_str = it.value;
            type_item = &it;
        } else if (it.key == "rank") {
            try { rank = std::stoi(it.value); } catch (...) { fail(it, "not an integer"); }
        } else if (it.key == "d") {
            try { dpar = std::stoi(it.value); } catch (...) { fail(it, "not an integer"); }
        } else if (it.key == "qf" || it.key == "qg" || it.key == "mu") {
            deferred.push_back(&it);
        } else if (it.key == "q0") {
            cfg.q0_list.clear();
            std::istringstream qs(it.value);
            std::string item;
            while (std::getline(qs, item, ',')) {
                try {
                    Rational v = detail::parse_rational(item);
                    if (v == 0) throw UsageError("q0 = 0");
                    cfg.q0_list.push_back(v);
                } catch (const std::exception&) {
                    fail(it, "bad rational '" + item + "'");
                }
            }
        } else if (it.key == "box") {
            try { cfg.box = std::stoi(it.value); } catch (...) { fail(it, "not an integer"); }
        } else if (it.key == "n") {
            try { cfg.springer_n = std::stoi(it.value); } catch (...) { fail(it, "not an integer"); }
        } else if (it.key == "height") {
            try { cfg.height = std::stoi(it.value); } catch (...) { fail(it, "not an integer"); }
        } else if (it.key == "jobs") {
            try { cfg.jobs = std::stoi(it.value); } catch (...) { fail(it, "not an integer"); }
        } else {
            fail(it, "unknown key");
        }
    }

    if (type_str.empty()) {
        errors.push_back("missing key: type");
    } else {
        CartanKind kind;
        int param = rank;
        if (type_str == "A") kind = CartanKind::A;
        else if (type_str == "B") kind = CartanKind::B;
        else if (type_str == "C") kind = CartanKind::C;
        else if (type_str == "D") kind = CartanKind::D;
        else if (type_str == "E") kind = CartanKind::E;
        else if (type_str == "F") kind = CartanKind::F;
        else if (type_str == "G") kind = CartanKind::G;
        else if (type_str == "gl") { kind = CartanKind::GL; param = dpar; }
        else if (type_str == "so") kind = CartanKind::SO;
        else if (type_str == "sp") kind = CartanKind::SP;
        else {
            fail(*type_item, "unknown type label '" + type_str + "'");
            kind = CartanKind::A;
            param = -1;
        }
        if (param != -1) {
            try {
                cfg.datum = CartanDatum::make(kind, param);
                cfg.springer_d = cfg.datum->lattice_dim();
            } catch (const std::exception& e) {
                fail(*type_item, e.what());
            }
        }
    }

    if (cfg.datum) {
        for (const Item* it : deferred) {
            try {
                if (it->key == "qf") cfg.qf = detail::parse_qfspec(it->value, *cfg.datum);
                if (it->key == "qg") cfg.qg = detail::parse_qfspec(it->value, *cfg.datum);
                if (it->key == "mu") cfg.mu = detail::parse_weight(it->value, *cfg.datum);
            } catch (const std::exception& e) {
                fail(*it, e.what());
            }
        }
        if (cfg.qf.type == QfSpec::Type::Box) cfg.springer_n = cfg.qf.n;
    }

    if (!errors.empty()) {
        std::string msg = "config errors:";
        for (const auto& e : errors) msg += "\n  " + e;
        throw UsageError(msg);
    }
    return cfg;
}

} // namespace qschur
