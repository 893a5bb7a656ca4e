# Generated by Django 5.2 on 2026-10-17 10:12

from django.db import migrations, models


class Migration(migrations.Migration):

    initial = True

    dependencies = [
    ]

    operations = [
        migrations.CreateModel(
            name='TableCache',
            fields=[
                ('table_id', models.AutoField(primary_key=True, serialize=False)),
                ('theory', models.CharField(choices=[('H', 'Cohomology (Schubert basis)'), ('K', 'K-theory (structure sheaf basis)')], max_length=1)),
                ('window', models.PositiveSmallIntegerField(help_text='n for the symmetric group S_n')),
                ('basis', models.CharField(help_text="Basis tag, e.g. 'schubert' or 'O'", max_length=8)),
                ('payload', models.JSONField(help_text='Sorted sparse entries with decimal-string coefficients')),
                ('checksum', models.CharField(max_length=128)),
                ('checksum_algorithm', models.CharField(default='sha256', max_length=16)),
                ('engine_version', models.CharField(db_index=True, max_length=20)),
                ('entry_count', models.PositiveIntegerField(default=0)),
                ('created_at', models.DateTimeField(auto_now_add=True)),
            ],
            options={
                'verbose_name': 'Structure-Constant Table',
                'verbose_name_plural': 'Structure-Constant Tables',
                'db_table': 'table_cache',
                'ordering': ['theory', 'window', 'basis'],
                'unique_together': {('theory', 'window', 'basis', 'engine_version')},
            },
        ),
    ]
