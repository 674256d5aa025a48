# standard library

# 3rd party libraries
import boto3

# project libraries
from .core import CoreApi

class ReportPublisher(CoreApi):
  """
  Copies report JSON to an S3 bucket next to the local files
  """
  def __init__(self, bucket, prefix='reports', log_at_level=None):
    CoreApi.__init__(self, log_at_level=log_at_level)
    self.bucket = bucket
    self.prefix = prefix.strip('/') if prefix else ''

    self.s3 = boto3.client('s3')

  def key_for(self, name):
    return "{}/{}".format(self.prefix, name) if self.prefix else name

  def publish(self, name, body):
    key = self.key_for(name)
    self.s3.put_object(
      Bucket=self.bucket,
      Key=key,
      Body=body.encode('utf-8') if isinstance(body, str) else body,
      ContentType='application/json'
    )
    self.log("Published [s3://{}/{}]".format(self.bucket, key))
    return key
