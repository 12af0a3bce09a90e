#include "latcert/group_descriptor.hpp"

#include <set>
#include <sstream>

#include "latcert/errors.hpp"

namespace latcert {

GroupDescriptor GroupDescriptor::trivial() { return {}; }

GroupDescriptor GroupDescriptor::affine(long d, std::vector<Integer> pi,
                                        std::vector<QMatrix> acts) {
    if (d < 1) fail(errc::invalid_argument, "dimension must be >= 1");
    for (const auto& p : pi)
        if (!is_prime(p)) fail(errc::invalid_argument, "pi must list primes");
    for (const auto& a : acts) {
        if (a.dim() != d) fail(errc::invalid_argument, "acting matrix dimension mismatch");
        for (const auto& b : acts)
            if (!(a * b == b * a)) fail(errc::invalid_argument, "acting matrices must commute");
    }
    GroupDescriptor g;
    g.kind_ = Kind::Affine;
    g.d_ = d;
    g.pi_ = std::move(pi);
    g.acts_ = std::move(acts);
    return g;
}

GroupDescriptor GroupDescriptor::product_wreath(long free_rank, long lamp_order) {
    if (free_rank < 0 || lamp_order < 2) fail(errc::invalid_argument, "need lamp order >= 2");
    GroupDescriptor g;
    g.kind_ = Kind::ProductWreath;
    g.free_rank_ = free_rank;
    g.lamp_order_ = lamp_order;
    return g;
}

GroupDescriptor GroupDescriptor::lambda_group(long d, long q) {
    lambda_identity(d, q); // validates
    GroupDescriptor g;
    g.kind_ = Kind::Lambda;
    g.d_ = d;
    g.q_ = q;
    return g;
}

std::string GroupDescriptor::name() const {
    std::ostringstream os;
    switch (kind_) {
    case Kind::Trivial: return "1";
    case Kind::Affine: {
        Integer n = 1;
        for (const auto& p : pi_) n *= p;
        if (pi_.empty())
            os << "Z^" << d_;
        else
            os << "Z[1/" << n.get_str() << "]^" << d_;
        os << " x| Z^" << acts_.size();
        return os.str();
    }
    case Kind::ProductWreath:
        if (free_rank_ > 0) os << "Z^" << free_rank_ << " x ";
        os << "(Z/" << lamp_order_ << " wr Z)";
        return os.str();
    case Kind::Lambda:
        os << "Lambda_" << d_ << "(" << q_ << ")";
        return os.str();
    }
    return "?";
}

Json GroupDescriptor::to_json() const {
    Json j;
    j["name"] = name();
    switch (kind_) {
    case Kind::Trivial: j["kind"] = "trivial"; break;
    case Kind::Affine: {
        j["kind"] = "affine";
        j["dimension"] = d_;
        Json primes = Json::array();
        for (const auto& p : pi_) primes.push_back(p.get_str());
        j["inverted_primes"] = std::move(primes);
        Json acts = Json::array();
        for (const auto& a : acts_) acts.push_back(a.str());
        j["acting_matrices"] = std::move(acts);
        break;
    }
    case Kind::ProductWreath:
        j["kind"] = "product-wreath";
        j["free_rank"] = free_rank_;
        j["lamp_order"] = lamp_order_;
        break;
    case Kind::Lambda:
        j["kind"] = "lambda";
        j["d"] = d_;
        j["q"] = q_;
        break;
    }
    return j;
}

GroupElement GroupDescriptor::id() const {
    switch (kind_) {
    case Kind::Trivial: return std::monostate{};
    case Kind::Affine: {
        AffineElement e;
        e.v.assign(static_cast<size_t>(d_), Rational(0));
        e.z.assign(acts_.size(), 0);
        return e;
    }
    case Kind::ProductWreath: {
        WreathElement e;
        e.free_part.assign(static_cast<size_t>(free_rank_), 0);
        return e;
    }
    case Kind::Lambda: return lambda_identity(d_, q_);
    }
    return std::monostate{};
}

std::vector<GroupElement> GroupDescriptor::generators() const {
    std::vector<GroupElement> gens;
    switch (kind_) {
    case Kind::Trivial: break;
    case Kind::Affine: {
        for (long i = 0; i < d_; ++i) {
            AffineElement e = std::get<AffineElement>(id());
            e.v[static_cast<size_t>(i)] = 1;
            gens.push_back(e);
            e.v[static_cast<size_t>(i)] = -1;
            gens.push_back(e);
        }
        for (size_t j = 0; j < acts_.size(); ++j) {
            AffineElement e = std::get<AffineElement>(id());
            e.z[j] = 1;
            gens.push_back(e);
            e.z[j] = -1;
            gens.push_back(e);
        }
        break;
    }
    case Kind::ProductWreath: {
        for (long i = 0; i < free_rank_; ++i) {
            WreathElement e = std::get<WreathElement>(id());
            e.free_part[static_cast<size_t>(i)] = 1;
            gens.push_back(e);
            e.free_part[static_cast<size_t>(i)] = -1;
            gens.push_back(e);
        }
        WreathElement lamp = std::get<WreathElement>(id());
        lamp.lamps[0] = 1;
        gens.push_back(lamp);
        if (lamp_order_ > 2) {
            lamp.lamps[0] = lamp_order_ - 1;
            gens.push_back(lamp);
        }
        WreathElement sh = std::get<WreathElement>(id());
        sh.shift = 1;
        gens.push_back(sh);
        sh.shift = -1;
        gens.push_back(sh);
        break;
    }
    case Kind::Lambda: {
        for (long i = 0; i + 1 < d_; ++i) {
            gens.push_back(lambda_shift_generator(d_, q_, i));
            gens.push_back(lambda_inv(lambda_shift_generator(d_, q_, i)));
        }
        LambdaElement r = lambda_ring_element(d_, q_, FpPoly::constant(q_, 1));
        gens.push_back(r);
        if (q_ > 2) gens.push_back(lambda_inv(r));
        break;
    }
    }
    return gens;
}

GroupElement GroupDescriptor::mul(const GroupElement& a, const GroupElement& b) const {
    switch (kind_) {
    case Kind::Trivial: return std::monostate{};
    case Kind::Affine: {
        const auto& x = std::get<AffineElement>(a);
        const auto& y = std::get<AffineElement>(b);
        QMatrix az = QMatrix::identity(d_);
        for (size_t j = 0; j < acts_.size(); ++j)
            if (x.z[j] != 0) az = az * acts_[j].pow(x.z[j]);
        AffineElement r;
        r.v = az.apply(y.v);
        for (long i = 0; i < d_; ++i) r.v[static_cast<size_t>(i)] += x.v[static_cast<size_t>(i)];
        r.z = x.z;
        for (size_t j = 0; j < r.z.size(); ++j) r.z[j] += y.z[j];
        return r;
    }
    case Kind::ProductWreath: {
        const auto& x = std::get<WreathElement>(a);
        const auto& y = std::get<WreathElement>(b);
        WreathElement r = x;
        for (size_t i = 0; i < r.free_part.size(); ++i) r.free_part[i] += y.free_part[i];
        for (const auto& [pos, val] : y.lamps) {
            long at = pos + x.shift;
            long nv = ((r.lamps.count(at) ? r.lamps[at] : 0) + val) % lamp_order_;
            if (nv == 0)
                r.lamps.erase(at);
            else
                r.lamps[at] = nv;
        }
        r.shift += y.shift;
        return r;
    }
    case Kind::Lambda: return lambda_mul(std::get<LambdaElement>(a), std::get<LambdaElement>(b));
    }
    return std::monostate{};
}

GroupElement GroupDescriptor::inv(const GroupElement& a) const {
    switch (kind_) {
    case Kind::Trivial: return std::monostate{};
    case Kind::Affine: {
        const auto& x = std::get<AffineElement>(a);
        QMatrix azinv = QMatrix::identity(d_);
        for (size_t j = 0; j < acts_.size(); ++j)
            if (x.z[j] != 0) azinv = azinv * acts_[j].pow(-x.z[j]);
        AffineElement r;
        r.v = azinv.apply(x.v);
        for (auto& c : r.v) c = -c;
        r.z.resize(x.z.size());
        for (size_t j = 0; j < x.z.size(); ++j) r.z[j] = -x.z[j];
        return r;
    }
    case Kind::ProductWreath: {
        const auto& x = std::get<WreathElement>(a);
        WreathElement r;
        r.free_part.resize(x.free_part.size());
        for (size_t i = 0; i < x.free_part.size(); ++i) r.free_part[i] = -x.free_part[i];
        for (const auto& [pos, val] : x.lamps) r.lamps[pos - x.shift] = lamp_order_ - val;
        r.shift = -x.shift;
        return r;
    }
    case Kind::Lambda: return lambda_inv(std::get<LambdaElement>(a));
    }
    return std::monostate{};
}

std::string GroupDescriptor::key(const GroupElement& a) const {
    std::ostringstream os;
    switch (kind_) {
    case Kind::Trivial: return "e";
    case Kind::Affine: {
        const auto& x = std::get<AffineElement>(a);
        for (const auto& c : x.v) os << to_string(c) << ",";
        os << "|";
        for (long c : x.z) os << c << ",";
        return os.str();
    }
    case Kind::ProductWreath: {
        const auto& x = std::get<WreathElement>(a);
        for (long c : x.free_part) os << c << ",";
        os << "|";
        for (const auto& [pos, val] : x.lamps) os << pos << ":" << val << ",";
        os << "|" << x.shift;
        return os.str();
    }
    case Kind::Lambda: return std::get<LambdaElement>(a).str();
    }
    return "?";
}

void EnvelopeDescriptor::add_isom_r2() {
    Json f;
    f["kind"] = "isom-r2";
    factors.push_back(std::move(f));
}

void EnvelopeDescriptor::add_isom_dl(std::vector<Integer> branching) {
    Json f;
    f["kind"] = "isom-dl";
    Json b = Json::array();
    for (const auto& n : branching) b.push_back(n.get_str());
    f["branching"] = std::move(b);
    factors.push_back(std::move(f));
}

void EnvelopeDescriptor::add_lie_sol(long d) {
    Json f;
    f["kind"] = "lie-sol";
    f["d"] = d;
    factors.push_back(std::move(f));
}

std::string EnvelopeDescriptor::display() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& f : factors) {
        if (!first) os << " x ";
        first = false;
        std::string kind = f.at("kind").get<std::string>();
        if (kind == "isom-r2") {
            os << "Isom(R^2)";
        } else if (kind == "isom-dl") {
            os << "Isom(DL(";
            bool c1 = true;
            for (const auto& b : f.at("branching")) {
                if (!c1) os << ",";
                c1 = false;
                os << b.get<std::string>();
            }
            os << "))";
        } else if (kind == "lie-sol") {
            long d = f.at("d").get<long>();
            os << "R^" << d << " x| (R^x)^" << (d - 1);
        }
    }
    return factors.empty() ? "1" : os.str();
}

Json EnvelopeDescriptor::to_json() const {
    Json j;
    j["display"] = display();
    j["factors"] = factors;
    return j;
}

std::vector<unsigned long long> growth_sizes(const GroupDescriptor& g, long radius,
                                             std::size_t cap) {
    if (radius < 0) fail(errc::invalid_argument, "radius must be >= 0");
    std::vector<GroupElement> gens = g.generators();
    std::set<std::string> seen;
    std::vector<GroupElement> frontier{g.id()};
    seen.insert(g.key(frontier.front()));
    std::vector<unsigned long long> balls{1};
    for (long r = 1; r <= radius; ++r) {
        std::vector<GroupElement> next;
        for (const auto& e : frontier)
            for (const auto& s : gens) {
                GroupElement w = g.mul(e, s);
                if (seen.insert(g.key(w)).second) {
                    if (seen.size() > cap)
                        fail(errc::memory_budget_exceeded, "growth ball exceeds vertex budget");
                    next.push_back(std::move(w));
                }
            }
        balls.push_back(static_cast<unsigned long long>(seen.size()));
        frontier = std::move(next);
    }
    return balls;
}

} // namespace latcert
