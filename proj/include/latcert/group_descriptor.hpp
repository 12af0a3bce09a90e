#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "latcert/certificate.hpp"
#include "latcert/lambda.hpp"
#include "latcert/qmatrix.hpp"

namespace latcert {

/// (v, z) in Z[1/pi]^d x| Z^r, the Z^r acting by commuting matrices.
struct AffineElement {
    std::vector<Rational> v;
    std::vector<long> z;
    bool operator==(const AffineElement& o) const { return v == o.v && z == o.z; }
};

/// (u, lamps, s) in Z^a x (Z/n wr Z); lamps maps position -> value in
/// [1, n), zero lamps omitted.
struct WreathElement {
    std::vector<long> free_part;
    std::map<long, long> lamps;
    long shift = 0;
    bool operator==(const WreathElement& o) const {
        return free_part == o.free_part && lamps == o.lamps && shift == o.shift;
    }
};

using GroupElement = std::variant<std::monostate, AffineElement, WreathElement, LambdaElement>;

/// Exact multiplication model for each group we emit: enough structure
/// to run BFS word balls with canonical-form deduplication.
class GroupDescriptor {
  public:
    enum class Kind { Trivial, Affine, ProductWreath, Lambda };

    static GroupDescriptor trivial();
    /// Z[1/pi]^d x| Z^r; acts are the r pairwise-commuting matrices.
    static GroupDescriptor affine(long d, std::vector<Integer> pi, std::vector<QMatrix> acts);
    /// Z^free_rank x (Z/lamp_order wr Z).
    static GroupDescriptor product_wreath(long free_rank, long lamp_order);
    static GroupDescriptor lambda_group(long d, long q);

    Kind kind() const { return kind_; }
    std::string name() const;
    Json to_json() const;

    GroupElement id() const;
    std::vector<GroupElement> generators() const; // closed under inverse
    GroupElement mul(const GroupElement& a, const GroupElement& b) const;
    GroupElement inv(const GroupElement& a) const;
    std::string key(const GroupElement& a) const;

  private:
    Kind kind_ = Kind::Trivial;
    long d_ = 0;
    std::vector<Integer> pi_;
    std::vector<QMatrix> acts_;
    long free_rank_ = 0;
    long lamp_order_ = 0;
    long q_ = 0;
};

/// Symbolic envelope: list of factors such as isom-r2, isom-dl with
/// branching parameters, or the solvable Lie factor R^d x| (R^x)^(d-1).
struct EnvelopeDescriptor {
    Json factors = Json::array();

    void add_isom_r2();
    void add_isom_dl(std::vector<Integer> branching);
    void add_lie_sol(long d);
    std::string display() const;
    Json to_json() const;
};

/// Ball sizes |B(0)|, ..., |B(radius)| of the word metric for the
/// descriptor's generator set.  Errors with MemoryBudgetExceeded past cap.
std::vector<unsigned long long> growth_sizes(const GroupDescriptor& g, long radius,
                                             std::size_t cap = 5000000);

} // namespace latcert
