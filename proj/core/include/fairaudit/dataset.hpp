#pragma once

#include <boost/dynamic_bitset.hpp>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace fairaudit {

using BitVec = boost::dynamic_bitset<>;

// Where a PSV came from: the raw column name and, for one-hot expanded
// categorical columns, the raw value it encodes. Raw binary columns keep
// an empty value.
struct PsvOrigin {
  std::string attribute;
  std::string value;
  bool operator==(const PsvOrigin&) const = default;
};

struct PsvSchema {
  std::vector<std::string> psv_names;
  std::vector<PsvOrigin> origins;

  std::size_t size() const { return psv_names.size(); }
  bool operator==(const PsvSchema&) const = default;
};

// An immutable population partitioned into K >= 2 nonempty classes. Rows
// are m-bit PSV vectors. A column-major index (one bitset per PSV per
// class) is built at construction so that coverage of a PSV disjunction
// is a bitwise OR of columns.
//
// Safe to share across concurrent audit workers once constructed.
class Dataset {
 public:
  static Dataset create(PsvSchema schema,
                        std::vector<BitVec> rows,
                        std::vector<std::size_t> class_of,
                        std::vector<std::string> class_labels,
                        std::vector<std::string> ids = {});

  std::size_t num_instances() const { return rows_.size(); }
  std::size_t num_psvs() const { return schema_.size(); }
  std::size_t num_classes() const { return class_labels_.size(); }

  const PsvSchema& schema() const { return schema_; }
  const std::vector<BitVec>& rows() const { return rows_; }
  const std::vector<std::size_t>& class_of() const { return class_of_; }
  const std::vector<std::string>& class_labels() const { return class_labels_; }
  const std::vector<std::size_t>& class_sizes() const { return class_sizes_; }

  // Instance ids from the optional id column; empty when none was given.
  const std::vector<std::string>& ids() const { return ids_; }

  // Instances of class k that have PSV j set, as a bitset over the
  // class's rows in stable row order.
  const BitVec& column(std::size_t k, std::size_t j) const;

  bool operator==(const Dataset&) const = default;

 private:
  Dataset() = default;

  PsvSchema schema_;
  std::vector<BitVec> rows_;
  std::vector<std::size_t> class_of_;
  std::vector<std::string> class_labels_;
  std::vector<std::size_t> class_sizes_;
  std::vector<std::string> ids_;
  std::vector<std::vector<BitVec>> columns_;  // [K][m]
};

// Loads a UTF-8 comma-separated file with a header row. Columns whose
// values are all "0"/"1" become single binary PSVs; any other column is
// expanded one-hot with one PSV per observed value (empty cells map to a
// dedicated "<missing>" value). The id column, when named, is carried
// through for reports but ignored by audits.
Dataset load_csv(const std::string& path, const std::string& class_column,
                 const std::optional<std::string>& id_column = std::nullopt);

void write_csv(const Dataset& d, const std::string& path,
               const std::string& class_column = "class");

// The instances of class k, in stable row order.
std::vector<BitVec> class_view(const Dataset& d, std::size_t k);

}  // namespace fairaudit
