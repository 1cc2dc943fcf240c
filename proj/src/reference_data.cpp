#include "rkhsm/reference_data.hpp"

#include <stdexcept>

namespace rkhsm {

namespace {

ReferenceRow row(double x, double rk4, double oham, const char* rkhsm) {
  return ReferenceRow{x, rk4, oham, rkhsm, std::stod(rkhsm), false, ""};
}

ReferenceRow suspect_row(double x, double rk4, double oham, const char* rkhsm, const char* note) {
  ReferenceRow r = row(x, rk4, oham, rkhsm);
  r.suspect = true;
  r.note = note;
  return r;
}

std::vector<ReferenceCase> build() {
  std::vector<ReferenceCase> cases;
  cases.push_back({{1.0, 1.0}, "4.1", "4.2", {
      row(0.0, 0.0, 0.0, "0.0"),
      row(0.1, 0.150294, 0.150265, "0.15029400074386619072"),
      row(0.2, 0.297481, 0.297424, "0.29748099943286204844"),
      row(0.3, 0.438467, 0.438387, "0.43846699936146542481"),
      row(0.4, 0.570189, 0.570093, "0.57018899983086605298"),
      row(0.5, 0.689624, 0.68952, "0.68962399932753349664"),
      row(0.6, 0.793796, 0.793695, "0.79379600052975674440"),
      row(0.7, 0.879779, 0.879695, "0.87977900034152532706"),
      row(0.8, 0.944696, 0.944641, "0.94469600021478585921"),
      row(0.9, 0.985707, 0.985687, "0.98570699945336089741"),
      row(1.0, 1.0, 1.0, "1.0"),
  }});
  cases.push_back({{3.0, 1.0}, "4.3", "4.4", {
      row(0.0, 0.0, 0.0, "0.0"),
      row(0.1, 0.137044, 0.13709, "0.13704399924397146430"),
      row(0.2, 0.272494, 0.272583, "0.27249400041809657591"),
      row(0.3, 0.404637, 0.404759, "0.40463699937791012358"),
      row(0.4, 0.531508, 0.531649, "0.53150799980699743080"),
      row(0.5, 0.650756, 0.650894, "0.65075599905912100256"),
      row(0.6, 0.759478, 0.759591, "0.75947799979255971384"),
      row(0.7, 0.854035, 0.854106, "0.85403499924057783299"),
      row(0.8, 0.929817, 0.929845, "0.92981700082221438640"),
      row(0.9, 0.980963, 0.980966, "0.98096299961587653980"),
      row(1.0, 1.0, 1.0, "1.0"),
  }});
  cases.push_back({{8.0, 1.0}, "4.5", "4.6", {
      row(0.0, 0.0, 0.0, "0.0"),
      row(0.1, 0.114976, 0.11507, "0.11497599095960418967"),
      row(0.2, 0.229882, 0.230068, "0.22988199268533318687"),
      row(0.3, 0.344604, 0.344866, "0.34460400584434350472"),
      row(0.4, 0.458904, 0.459205, "0.45890399132822355411"),
      row(0.5, 0.572276, 0.572545, "0.5722759999680104400"),
      row(0.6, 0.683628, 0.683769, "0.68362799155831029523"),
      row(0.7, 0.790607, 0.790543, "0.79060700783664672119"),
      row(0.8, 0.888173, 0.887936, "0.88817300466724146312"),
      row(0.9, 0.965578, 0.965381, "0.96557800220185786369"),
      row(1.0, 1.0, 1.0, "1.0"),
  }});
  cases.push_back({{20.0, 1.0}, "4.7", "4.8", {
      row(0.0, 0.0, 0.0, "0.0"),
      row(0.1, 0.105391, 0.105312, "0.10539098947593257979"),
      row(0.2, 0.210782, 0.210625, "0.2107819933190829"),
      row(0.3, 0.316173, 0.315938, "0.3161729190893567630"),
      row(0.4, 0.421563, 0.421249, "0.4215629919618786430"),
      row(0.5, 0.526952, 0.526551, "0.5269519479728988"),
      row(0.6, 0.632324, 0.631824, "0.632323981769674315"),
      row(0.7, 0.737586, 0.736971, "0.7375860570172070642"),
      row(0.8, 0.842051, 0.841352, "0.84205103495023398982"),
      row(0.9, 0.940861, 0.94035, "0.94086101815219431313"),
      row(1.0, 1.0, 1.0, "1.0"),
  }});
  cases.push_back({{1.0, 4.0}, "4.9", "4.10", {
      row(0.0, 0.0, 0.0, "0.0"),
      row(0.1, 0.158104, 0.156218, "0.15810400012535311729"),
      row(0.2, 0.311962, 0.308363, "0.31196200057873017887"),
      row(0.3, 0.457539, 0.452557, "0.45753900003164153289"),
      row(0.4, 0.591193, 0.585287, "0.59119300033029000468"),
      row(0.5, 0.709771, 0.703518, "0.70977100026331200670"),
      row(0.6, 0.810642, 0.804726, "0.81064200064720692438"),
      row(0.7, 0.891666, 0.886838, "0.89166599939606220359"),
      row(0.8, 0.95112, 0.948051, "0.95112000044608660232"),
      row(0.9, 0.987612, 0.986529, "0.98761199979328069240"),
      row(1.0, 1.0, 1.0, "1.0"),
  }});
  cases.push_back({{1.0, 10.0}, "4.11", "4.12", {
      row(0.0, 0.0, 0.0, "0.0"),
      row(0.1, 0.167616, 0.175911, "0.1676160001397322991"),
      row(0.2, 0.329031, 0.344336, "0.32903100221406728329"),
      row(0.3, 0.478907, 0.498671, "0.47890699791462877619"),
      row(0.4, 0.613252, 0.633941, "0.61325199550552162812"),
      row(0.5, 0.729428, 0.747277, "0.72942799845508679063"),
      row(0.6, 0.825843, 0.838004, "0.82584300690485584332"),
      suspect_row(0.7, 0.901576, 0.907244, "0.90157600840425340903",
                  "RK-4 value 0.901576 is printed again for x = 0.8"),
      suspect_row(0.8, 0.901576, 0.956954, "0.90157518382496567601",
                  "RK-4 and RKHSM repeat the x = 0.7 value; OHAM column disagrees (0.956954)"),
      row(0.9, 0.988978, 0.988387, "0.98897799997420425356"),
      row(1.0, 1.0, 1.0, "1.0"),
  }});
  return cases;
}

}  // namespace

const std::vector<ReferenceCase>& reference_cases() {
  static const std::vector<ReferenceCase> cases = build();
  return cases;
}

const ReferenceCase* find_reference(const ProblemParams& params) {
  for (const auto& c : reference_cases()) {
    if (c.params == params) return &c;
  }
  return nullptr;
}

const ReferenceCase& reference_for_table(const std::string& table_id) {
  for (const auto& c : reference_cases()) {
    if (c.results_table == table_id || c.comparison_table == table_id) return c;
  }
  throw std::invalid_argument("unknown table id '" + table_id + "' (expected 4.1 .. 4.12)");
}

std::vector<std::string> reference_table_ids() {
  std::vector<std::string> ids;
  for (const auto& c : reference_cases()) {
    ids.push_back(c.results_table);
    ids.push_back(c.comparison_table);
  }
  return ids;
}

}  // namespace rkhsm
