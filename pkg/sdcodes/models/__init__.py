from .certificate import CertificateKind, MinWeightCertificate
from .distribution import WeightDistribution
from .record import CampaignStats, ScreenResult, SearchConfig, SearchRecord
