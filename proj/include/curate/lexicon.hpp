#pragma once

#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "curate/embeddings.hpp"
#include "curate/error.hpp"
#include "curate/tokenize.hpp"

namespace curate {

/// Named list of single-word domain terms: lowercase, deduplicated, non-empty.
struct DomainLexicon {
  std::string domain_name;
  std::vector<std::string> terms;

  std::size_t size() const noexcept { return terms.size(); }
};

/// Normalizes raw terms: trims, lowercases, drops duplicates keeping the
/// first occurrence. Throws ConfigError for multi-word or empty input.
template <class Range>
DomainLexicon make_lexicon(std::string domain_name, const Range& raw_terms) {
  DomainLexicon lex{std::move(domain_name), {}};
  std::unordered_set<std::string> seen;
  for (std::string_view raw : raw_terms) {
    const auto b = raw.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos) continue;
    const auto e = raw.find_last_not_of(" \t\r\n");
    const std::string_view term = raw.substr(b, e - b + 1);
    if (term.find_first_of(" \t") != std::string_view::npos) {
      throw ConfigError("lexicon term '" + std::string(term) + "' is not a single word");
    }
    std::string lower = to_lower(term);
    if (seen.insert(lower).second) lex.terms.push_back(std::move(lower));
  }
  if (lex.terms.empty()) throw ConfigError("lexicon '" + lex.domain_name + "' has no terms");
  return lex;
}

inline DomainLexicon make_lexicon(std::string domain_name, std::initializer_list<std::string_view> raw) {
  return make_lexicon<std::initializer_list<std::string_view>>(std::move(domain_name), raw);
}

/// One term per line; '#' starts a comment. Domain name defaults to the file stem.
inline DomainLexicon load_lexicon(const std::filesystem::path& path, std::string domain_name = {}) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read lexicon '" + path.string() + "'");
  std::vector<std::string> raw;
  std::string line;
  while (std::getline(in, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    raw.push_back(line);
  }
  if (domain_name.empty()) domain_name = path.stem().string();
  return make_lexicon(std::move(domain_name), raw);
}

/// Astronomy terms (106 table entries, no duplicates after lowercasing).
inline DomainLexicon astronomy_lexicon() {
  return make_lexicon("astronomy", {
      "Albedo", "Aphelion", "Apogee", "Asteroid", "Astronomy", "Aurora", "Axion", "Azimuth",
      "Barycenter", "Baryon", "Blackbody", "Bolide", "Brilliance", "Cepheid", "Comet",
      "Constellation", "Corona", "Cosmic", "Cosmology", "DESC", "Dyne", "Eclipse", "Ecliptic",
      "Emission", "Erg", "Exoplanet", "Extinction", "Fluence", "Frequency", "Galaxy",
      "Geocentric", "Gibbous", "Gravity", "Heliocentric", "Interferometry", "Isotropic", "JWST",
      "kpc", "Light-Year", "LSST", "Luminosity", "Magnetar", "Magnetosphere", "Metallicity",
      "Meteor", "Meteorite", "Microlensing", "Moon", "Morphology", "Multiverse", "Nebula",
      "Neutrino", "Noctilucent", "Nova", "Nucleosynthesis", "Orbit", "Parallax", "Parsec",
      "Perihelion", "Phase", "Photometry", "Photosphere", "Planck", "Planetesimal", "Pulsar",
      "Quasar", "Quiescence", "Recombination", "Reddening", "Redshift", "Reionization",
      "Satellite", "Seyfert", "Simulation", "Singularity", "Spectroscopy", "SPT", "Sublimation",
      "Sunspot", "Supercomputer", "Supermassive", "Supernova", "Telescope", "Transit",
      "Universe", "Voids", "Wavelength", "Waxing", "Wormhole", "X-ray", "Zenith", "Zodiac",
      "Optical", "Infrared", "Ultraviolet", "Microwave", "Proton", "Neutron", "Electron", "Flux",
      "Intensity", "Companion", "Outflow", "QSO", "Pulse", "Progenitor",
  });
}

inline DomainLexicon medicine_lexicon() {
  return make_lexicon("medicine", {
      "Anatomy", "Pathology", "Physiology", "Oncology", "Cardiology", "Neurology", "Radiology",
      "Pharmacology", "Surgery", "Pediatrics", "Dermatology", "Gastroenterology", "Endocrinology",
      "Hematology", "Immunology", "Nephrology", "Pulmonology", "Psychiatry", "Rheumatology",
      "Urology", "Obstetrics", "Gynecology", "Orthopedics", "Ophthalmology", "Otolaryngology",
      "Infectious", "Microbiology", "Epidemiology", "Toxicology", "Genetics", "Biochemistry",
      "Histology", "Embryology", "Virology", "Bacteriology", "Parasitology", "Cytology",
      "Prognosis", "Diagnosis", "Treatment", "Therapy", "Vaccination", "Antibiotic", "Antiviral",
      "Pathogen", "Tumor", "Cancer", "Leukemia", "Diabetes", "Hypertension", "Cardiomyopathy",
      "Stroke", "Sepsis", "Inflammation", "Autoimmune", "Fibrosis", "Circulation", "Respiration",
      "Homeostasis", "Anesthesia", "Trauma", "Fracture", "Hemorrhage", "Venous", "Arterial",
      "Renal", "Hepatic", "Liver", "Kidney", "Lung", "Heart", "Brain", "Spinal", "Nerve", "Bone",
      "Muscle", "Skin", "Blood", "Plasma", "Lymph", "Hormone", "Enzyme", "Protein", "Gene", "DNA",
      "RNA", "Chromosome", "Cell", "Tissue", "Organ", "Organism", "Metabolism", "Nutrition",
      "Obesity", "Malnutrition", "Infection", "Immunity", "Allergy", "Vaccine", "Mutation",
      "Carcinogen", "Biopsy", "MRI", "CT", "X-ray", "Ultrasound", "PET", "Radiotherapy",
      "Chemotherapy", "Surgical", "Endoscopy", "Laparoscopy", "Thermography", "Pharmacokinetics",
      "Pharmacodynamics", "Clinical", "Hospital", "Ambulance", "ICU", "Ward", "Therapist",
      "Psychologist", "Psychiatrist", "Physician", "Surgeon", "Nurse", "Paramedic", "Dentist",
      "Optometrist", "Audiologist", "Dietitian", "Nutritionist", "Emergency", "CPR",
      "Defibrillator", "Vaccination", "Inoculation", "Antibody", "Antigen", "Biomarker",
      "Cytokine", "Pathogenesis", "Therapeutics", "Rehabilitation", "Prosthesis", "Implant",
      "Transplant", "Donor", "Recipient", "ClinicalTrial", "Placebo", "DoubleBlind", "Epidemic",
      "Pandemic", "Outbreak", "Quarantine", "Contagion", "Immunotherapy", "PrecisionMedicine",
      "RegenerativeMedicine", "Telemedicine", "Bioinformatics", "Genomics", "Proteomics",
      "Metabolomics", "Transcriptomics", "PersonalizedMedicine", "PalliativeCare", "Hospice",
      "Prenatal", "Postnatal", "Neonatal", "Geriatrics", "Reproductive", "Contraception",
      "Fertility", "Menopause", "Puberty", "Hormonal", "Chronic", "Acute", "Degenerative",
      "Congenital", "Hereditary", "Idiopathic", "Nosocomial", "Iatrogenic", "Symptom", "Sign",
      "Prognosis", "Complication", "Remission", "Relapse", "Recurrence", "SurvivalRate",
      "LifeExpectancy", "RiskFactor", "Comorbidity", "QualityOfLife", "Ethics", "Consent",
      "Bioethics", "Healthcare", "Wellness", "Preventive", "Morbidity", "Mortality", "Anomaly",
      "Deformity", "Lesion", "Ulcer", "Necrosis", "Abscess", "Edema", "Cyst", "Nodule", "Polyp",
      "Scar", "Adhesion", "Prolapse", "Hernia", "Perforation", "Obstruction", "Atrophy",
      "Hypertrophy", "Hyperplasia", "Hypoplasia", "Dysplasia", "Neoplasia", "Metastasis",
      "Differentiation", "Invasion", "Proliferation", "Aneurysm", "Thrombosis", "Embolism",
      "Ischemia", "Infraction", "Arrhythmia", "Bradycardia", "Tachycardia", "Fibrillation",
      "Shock", "Syncope", "Coma",
  });
}

/// Law terms. Only the first three are established seeds; the rest is a
/// provisional list maintained here and should be replaced by a curated one.
inline DomainLexicon law_lexicon() {
  return make_lexicon("law", {
      "litigation", "precedent", "contract",
      // provisional
      "statute", "plaintiff", "defendant", "jurisdiction", "tort", "appellate", "verdict",
      "testimony", "affidavit", "injunction", "indictment", "prosecution", "attorney",
      "counsel", "judiciary", "legislation", "constitutional", "liability", "negligence",
      "arbitration", "subpoena", "damages", "appeal", "court", "judge", "lawsuit", "statutory",
  });
}

/// Hash set of lexicon terms for counting term hits in raw text.
class TermSet {
 public:
  explicit TermSet(const DomainLexicon& lexicon) : terms_(lexicon.terms.begin(), lexicon.terms.end()) {}

  bool contains(std::string_view token) const { return terms_.contains(token); }

  struct Hits {
    std::size_t hits = 0;
    std::size_t tokens = 0;
  };

  /// Tokenizes text canonically and counts tokens that are terms.
  Hits count(std::string_view text) const {
    Hits h;
    std::string token;
    detail::for_each_token_span(text, [&](std::size_t b, std::size_t e) {
      token.clear();
      const std::string_view raw = text.substr(b, e - b);
      std::size_t pos = 0;
      while (pos < raw.size()) detail::append_lower(token, detail::decode_utf8(raw, pos));
      ++h.tokens;
      if (terms_.contains(token)) ++h.hits;
    });
    return h;
  }

 private:
  std::unordered_set<std::string, detail::StringHash, std::equal_to<>> terms_;
};

/// Bundled lexicon by name: astronomy, medicine, law.
inline DomainLexicon bundled_lexicon(std::string_view name) {
  if (name == "astronomy") return astronomy_lexicon();
  if (name == "medicine") return medicine_lexicon();
  if (name == "law") return law_lexicon();
  throw ConfigError("no bundled lexicon named '" + std::string(name) + "'");
}

}  // namespace curate
