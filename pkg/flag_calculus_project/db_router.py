# flag_calculus_project/db_router.py

class TablesRouter:
    APP_LABEL = "schubert_app"  # Owns the structure-table cache
    DATABASE = "tables"

    def db_for_read(self, model, **hints):
        if model._meta.app_label == self.APP_LABEL:
            return self.DATABASE
        return None  # Use 'default' for other apps

    def db_for_write(self, model, **hints):
        if model._meta.app_label == self.APP_LABEL:
            return self.DATABASE
        return None

    def allow_relation(self, obj1, obj2, **hints):
        labels = {obj1._meta.app_label, obj2._meta.app_label}
        if self.APP_LABEL in labels:
            # Cache rows never point outside their own database
            return labels == {self.APP_LABEL}
        return None

    def allow_migrate(self, db, app_label, model_name=None, **hints):
        if app_label == self.APP_LABEL:
            # schubert_app tables only exist in the 'tables' database
            return db == self.DATABASE
        # Django's own apps stay on 'default'
        return db == "default"
